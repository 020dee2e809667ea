"""Acceptance suite: one test per criterion, one printed PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines as they complete.  Criterion 9 compares against the published
growth-rate table; its two gamma=2 entries are inconsistent with the exact
counting sequences (see README, "Known discrepancy") and fail honestly here.
"""

import time
import warnings
from math import comb

import mpmath
import pytest

from gammaenum import oracle
from gammaenum.asym import (
    algebraic_singularity,
    dominant_singularity,
    series_asym_ratio,
    structure_growth,
)
from gammaenum.exact import BiPoly, Poly, TruncSeries, bipoly_eval_series
from gammaenum.gamma import G_series, Gtilde_series, H_series, S_series, build_P
from gammaenum.hz import C_series, Q_poly, double_factorial, hz_table
from gammaenum.rational import Q
from gammaenum.reference_values import GROWTH_TABLE, reference_I, reference_Q
from gammaenum.shadows import shadow_set
from gammaenum.verify import render_json, render_text, run_verification


def _report(criterion: str, ok: bool, detail: str = "", elapsed: float | None = None):
    status = "PASS" if ok else "FAIL"
    timing = f" [{elapsed:.1f}s]" if elapsed is not None else ""
    tail = f" :: {detail}" if detail else ""
    print(f"ACCEPTANCE {criterion}: {status}{timing}{tail}")


@pytest.fixture(scope="module")
def shadows8():
    return shadow_set(8, use_cache=False)


@pytest.fixture(scope="module")
def h_series_by_gamma(shadows8):
    return {gamma: H_series(gamma, 12, shadows=shadows8) for gamma in (1, 2)}


@pytest.fixture(scope="module")
def asym_by_gamma(shadows8):
    out = {}
    for gamma in (1, 2):
        system = build_P(gamma, shadows8)
        h = H_series(gamma, 120, shadows=shadows8)
        out[gamma] = (
            dominant_singularity(
                gamma, precision=Q(1, 10**15), system=system, h=h, use_cache=False
            ),
            h,
        )
    return out


def test_criterion_01_hz_cross_check():
    start = time.perf_counter()
    table = hz_table(4, 9)
    ok = True
    for m in range(10):
        counts = oracle.count_matchings_by_genus(m)
        for g in range(5):
            if table.count(g, m) != counts.get(g):
                ok = False
        if table.row_sum(m) != double_factorial(m):
            ok = False
    elapsed = time.perf_counter() - start
    _report("01 genus recursion vs enumeration (g<=4, m<=9)", ok and elapsed <= 300, elapsed=elapsed)
    assert ok
    assert elapsed <= 300


def test_criterion_02_q_polynomials():
    start = time.perf_counter()
    ok = all(Q_poly(g) == reference_Q(g) for g in range(1, 6))
    ok = ok and Q_poly(4)[10] == 143 * 18378
    elapsed = time.perf_counter() - start
    _report("02 branch-factor polynomials Q_1..Q_5", ok and elapsed <= 1.0, elapsed=elapsed)
    assert ok
    assert elapsed <= 1.0


def test_criterion_03_shadow_polynomials_vs_reference(tmp_path):
    start = time.perf_counter()
    computed = shadow_set(8, cache_dir=tmp_path)  # cold cache, includes the write
    ok = all(computed.poly(g) == reference_I(g) for g in range(1, 9))
    ok = ok and computed.poly(8)[46] == 12107536630199227514880
    elapsed = time.perf_counter() - start
    _report("03 shadow polynomials I_1..I_8 vs reference", ok and elapsed <= 120, elapsed=elapsed)
    assert ok
    assert elapsed <= 120


def test_criterion_04_shadows_vs_brute_force(shadows8):
    start = time.perf_counter()
    ok = True
    for m in range(9):
        counts = oracle.count_irreducible_shadows(m, oracle.with_caps(shadows=8))
        for g in range(1, m // 2 + 1):
            if counts.get(g) != shadows8.count(g, m):
                ok = False
    spot = (
        shadows8.count(1, 2) == 1
        and shadows8.count(1, 3) == 2
        and shadows8.count(1, 4) == 1
        and shadows8.count(2, 4) == 17
        and shadows8.count(2, 5) == 160
    )
    ok = ok and spot
    elapsed = time.perf_counter() - start
    _report("04 irreducible shadows vs enumeration (m<=8)", ok and elapsed <= 600, elapsed=elapsed)
    assert ok
    assert elapsed <= 600


def test_criterion_05_gamma_matchings(shadows8):
    start = time.perf_counter()
    ok = True
    for gamma in (1, 2):
        h = H_series(gamma, 9, shadows=shadows8)
        for m in range(10):
            if int(h.coeffs[m]) != oracle.count_gamma_matchings(gamma, m):
                ok = False
    elapsed = time.perf_counter() - start
    _report("05 genus-bounded matchings vs enumeration (m<=9)", ok and elapsed <= 600, elapsed=elapsed)
    assert ok
    assert elapsed <= 600


def test_criterion_06_defining_polynomial(shadows8):
    start = time.perf_counter()
    ok = True
    for gamma in (1, 2, 3):
        system = build_P(gamma, shadows8)
        h = H_series(gamma, 60, shadows=shadows8, system=system)
        u = TruncSeries(60, [0, 1])
        if bipoly_eval_series(system.P, u, h) != TruncSeries.zero(60):
            ok = False
        kappa = 6 * gamma - 2
        if system.P.degree_x != 2 + 2 * kappa:
            ok = False
        if system.P.coeff_x(2 + 2 * kappa) != Poly([0] * (kappa + 1) + [-1]):
            ok = False
    elapsed = time.perf_counter() - start
    _report("06 defining polynomial annihilates H (order 60)", ok and elapsed <= 30, elapsed=elapsed)
    assert ok
    assert elapsed <= 30


def test_criterion_07_structures(h_series_by_gamma):
    start = time.perf_counter()
    ok = True
    for gamma in (1, 2):
        h = h_series_by_gamma[gamma]
        for tau in (1, 2):
            g = G_series(tau, gamma, 12, h=h)
            gt = Gtilde_series(tau, gamma, 12, h=h)
            for n in range(13):
                if int(g.coeffs[n]) != oracle.count_structures(tau, gamma, n, False):
                    ok = False
                if int(gt.coeffs[n]) != oracle.count_structures(tau, gamma, n, True):
                    ok = False
    prefix = [int(c) for c in G_series(1, 1, 4, h=h_series_by_gamma[1].truncate(4)).coeffs]
    ok = ok and prefix == [1, 1, 1, 2, 5]
    elapsed = time.perf_counter() - start
    _report("07 structure counts vs enumeration (n<=12)", ok and elapsed <= 600, elapsed=elapsed)
    assert ok
    assert elapsed <= 600


def test_criterion_08_shapes(h_series_by_gamma):
    start = time.perf_counter()
    ok = True
    for gamma in (1, 2):
        s = S_series(gamma, 7, h=h_series_by_gamma[gamma].truncate(7))
        for m in range(8):
            counts = oracle.count_shapes(gamma, m)
            for one in range(m + 1):
                if int(s.level(one).coeffs[m]) != counts.get(m, one):
                    ok = False
    elapsed = time.perf_counter() - start
    _report("08 shape counts vs enumeration (up to 7 arcs)", ok and elapsed <= 300, elapsed=elapsed)
    assert ok
    assert elapsed <= 300


@pytest.mark.parametrize(
    "tau,gamma,with_one", sorted(GROWTH_TABLE), ids=lambda v: str(v)
)
def test_criterion_09_growth_rates(asym_by_gamma, tau, gamma, with_one):
    entry = GROWTH_TABLE[(tau, gamma, with_one)]
    start = time.perf_counter()
    data, _ = asym_by_gamma[gamma]
    rate = structure_growth(tau, gamma, with_one, Q(1, 10**7), asym=data)
    target = Q(entry["value"].replace(".", "")) / Q(10**4)
    diff = abs(rate.value - target)
    ok = diff <= Q(5, 10**5)
    elapsed = time.perf_counter() - start
    detail = f"computed {float(rate.value):.6f}, table {entry['value']}"
    if entry["known_mismatch"]:
        detail += " (published value inconsistent with exact counts; see README)"
    _report(f"09 growth rate tau={tau} gamma={gamma} one_arcs={with_one}", ok, detail, elapsed)
    assert ok, detail
    assert elapsed <= 120


def test_criterion_10_transfer_asymptotics(shadows8, asym_by_gamma):
    start = time.perf_counter()
    data, _ = asym_by_gamma[1]
    h = H_series(1, 400, shadows=shadows8)
    devs = {n: abs(series_asym_ratio(h, n, data) - 1.0) for n in (100, 200, 400)}
    ok = devs[400] < 0.05 and devs[400] < devs[200] < devs[100]
    phi = BiPoly.from_terms({(0, 1): 1, (0, 0): -1, (1, 2): -1})
    cat_data = algebraic_singularity(phi, C_series(0, 120), Q(1, 10**15))
    with mpmath.workdps(300):
        coeff = mpmath.mpf(comb(800, 400)) / 401
        predicted = cat_data.c_val * mpmath.power(400, -1.5) * mpmath.power(4, 400)
        cat_ratio = float(coeff / predicted)
    ok = ok and abs(cat_ratio - 1.0) < 0.02
    elapsed = time.perf_counter() - start
    _report(
        "10 transfer ratio trend (gamma=1) and Catalan sanity",
        ok and elapsed <= 120,
        f"deviations {devs[100]:.4f} > {devs[200]:.4f} > {devs[400]:.4f}; catalan {cat_ratio:.4f}",
        elapsed,
    )
    assert ok
    assert elapsed <= 120


def test_criterion_11_divisibility_conjecture(shadows8):
    start = time.perf_counter()
    factor_base = Poly([0, 1]) * Poly([1, 1])
    holds = {g: factor_base.pow(2 * g).divides(shadows8.poly(g)) for g in range(1, 9)}
    all_hold = all(holds.values())
    elapsed = time.perf_counter() - start
    _report(
        "11 conjectured factor z^2g (1+z)^2g divides I_g (g<=8, conjectural)",
        True,
        "holds for all computed g" if all_hold else f"fails for {sorted(g for g, v in holds.items() if not v)}",
        elapsed,
    )
    if not all_hold:
        warnings.warn(f"divisibility conjecture failed for {holds}")  # warning, not error


def test_criterion_12_verify_determinism(tmp_path):
    start = time.perf_counter()
    cache = tmp_path / "cache"
    cold = run_verification("full", cache_dir=cache)
    cold_text, cold_json = render_text(cold), render_json(cold)
    warm = run_verification("full", cache_dir=cache)
    warm_text, warm_json = render_text(warm), render_json(warm)
    ok = cold_text.encode() == warm_text.encode() and cold_json.encode() == warm_json.encode()
    elapsed = time.perf_counter() - start
    _report("12 full verification deterministic across cold/warm cache", ok, elapsed=elapsed)
    assert ok

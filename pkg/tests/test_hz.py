"""Genus recursion table and the branch-factor polynomials Q_g."""

import pytest

from gammaenum import oracle
from gammaenum.errors import PolynomialityViolation
from gammaenum.exact import Poly, series_binomial_power
from gammaenum.hz import C_series, Q_poly, double_factorial, hz_table
from gammaenum.rational import Q
from gammaenum.reference_values import REFERENCE_Q_GENERA, reference_Q


def test_recursion_values():
    t = hz_table(2, 6)
    assert t.count(0, 3) == 5
    assert t.count(1, 2) == 1
    assert t.count(1, 3) == 10
    assert t.count(1, 4) == 70
    assert t.count(2, 4) == 21


def test_catalan_row():
    t = hz_table(0, 10)
    catalan = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]
    assert [t.count(0, m) for m in range(11)] == catalan


def test_row_sums():
    t = hz_table(4, 9)
    for m in range(10):
        assert t.row_sum(m) == double_factorial(m)


def test_zero_below_diagonal():
    t = hz_table(4, 9)
    for m in range(10):
        for g in range(5):
            if 2 * g > m:
                assert t.count(g, m) == 0


@pytest.mark.parametrize("m", range(0, 7))
def test_table_matches_enumeration(m):
    t = hz_table(3, 7)
    counts = oracle.count_matchings_by_genus(m)
    for g in range(4):
        assert t.count(g, m) == counts.get(g)


def test_c_series_prefixes():
    assert [int(c) for c in C_series(0, 4).coeffs] == [1, 1, 2, 5, 14]
    assert [int(c) for c in C_series(1, 4).coeffs] == [0, 0, 1, 10, 70]
    assert [int(c) for c in C_series(2, 4).coeffs] == [0, 0, 0, 0, 21]


@pytest.mark.parametrize("g", REFERENCE_Q_GENERA)
def test_q_polys_match_reference(g):
    assert Q_poly(g) == reference_Q(g)


def test_q_poly_valuation_and_value():
    for g in (1, 2, 3):
        q = Q_poly(g)
        assert q.valuation() == 2 * g
        assert q.degree <= 3 * g - 1
        assert q(Q(1, 4)) != 0


def test_q_reconstruction():
    # Q_g(z) * (1-4z)^(1/2 - 3g) reproduces the counting series exactly
    for g in (1, 2, 3):
        order = 3 * g + 8
        rebuilt = Q_poly(g).to_series(order) * series_binomial_power(-4, Q(1 - 6 * g, 2), order)
        assert rebuilt == C_series(g, order)


def test_table_disk_roundtrip(tmp_path):
    from gammaenum.hz import load_table, store_table

    table = hz_table(2, 6)
    store_table(table, tmp_path)
    loaded = load_table(2, 6, tmp_path)
    assert loaded is not None and loaded.c == table.c
    assert load_table(3, 6, tmp_path) is None
    assert '"c_g_m"' in (tmp_path / "hz_2_6.json").read_text()


def test_q_poly_rejects_tampered_series(monkeypatch):
    # corrupting one count must trip the polynomiality assertion
    import gammaenum.hz as hz_mod

    real = hz_mod.C_series

    def tampered(g, order, table=None):
        s = real(g, order, table)
        coeffs = list(s.coeffs)
        coeffs[-1] += 1
        return type(s)(s.order, coeffs)

    monkeypatch.setattr(hz_mod, "C_series", tampered)
    with pytest.raises(PolynomialityViolation):
        hz_mod.Q_poly(1)

"""Defining polynomial, genus-bounded matching series, and structure series."""

import pytest

from gammaenum import oracle
from gammaenum.errors import NonzeroInnerConstant
from gammaenum.exact import Poly, TruncSeries, bipoly_eval_series
from gammaenum.gamma import (
    A_series,
    G_lambda_series,
    G_series,
    Gtilde_series,
    H_series,
    S_series,
    build_P,
    structure_substitutions,
    u_tau_series,
)
from gammaenum.hz import double_factorial
from gammaenum.rational import Q
from gammaenum.shadows import shadow_set


@pytest.fixture(scope="module")
def shadows():
    return shadow_set(2, use_cache=False)


@pytest.fixture(scope="module")
def h1(shadows):
    return H_series(1, 16, shadows=shadows)


@pytest.fixture(scope="module")
def h2(shadows):
    return H_series(2, 12, shadows=shadows)


def test_build_P_gamma1(shadows):
    system = build_P(1, shadows)
    assert system.kappa == 4
    assert system.P.degree_x == 10
    assert system.P.coeff_x(10) == Poly([0, 0, 0, 0, 0, -1])
    # at u=0 the equation reduces to X - 1 = 0
    assert system.P.eval(Q(0), Q(1)) == 0


def test_P_annihilates_H(shadows, h1):
    system = build_P(1, shadows)
    u = TruncSeries(h1.order, [0, 1])
    assert bipoly_eval_series(system.P, u, h1) == TruncSeries.zero(h1.order)


def test_h_prefix_values(h1, h2):
    assert [int(c) for c in h1.coeffs[:4]] == [1, 1, 3, 15]
    # genus-3 components need at least 6 arcs
    assert [int(c) for c in h2.coeffs[:6]] == [double_factorial(m) for m in range(6)]


@pytest.mark.parametrize("gamma", [1, 2])
def test_h_matches_oracle(shadows, gamma):
    h = H_series(gamma, 7, shadows=shadows)
    for m in range(8):
        assert int(h.coeffs[m]) == oracle.count_gamma_matchings(gamma, m)


def test_h_monotonicity(h1, h2):
    for m in range(12):
        assert h1.coeffs[m] <= h2.coeffs[m] <= double_factorial(m)
        if m <= 3:  # 2*gamma + 1 for gamma=1
            assert h1.coeffs[m] == double_factorial(m)
        else:
            assert h1.coeffs[m] < double_factorial(m)


def test_s_series_examples(shadows, h1):
    s = S_series(1, 4, h=h1.truncate(4))
    assert int(s.level(0).coeffs[0]) == 1
    # one arc: the single 1-arc shape
    assert int(s.level(1).coeffs[1]) == 1 and int(s.level(0).coeffs[1]) == 0
    # two arcs: serial shape (two 1-arcs) and the crossing (none)
    assert int(s.level(0).coeffs[2]) == 1
    assert int(s.level(1).coeffs[2]) == 0
    assert int(s.level(2).coeffs[2]) == 1


@pytest.mark.parametrize("gamma", [1, 2])
def test_s_series_matches_oracle(shadows, gamma):
    order = 6
    s = S_series(gamma, order, h=H_series(gamma, order, shadows=shadows))
    for m in range(order + 1):
        counts = oracle.count_shapes(gamma, m)
        for one in range(m + 1):
            assert int(s.level(one).coeffs[m]) == counts.get(m, one), (gamma, m, one)


def test_u_tau_values():
    assert [int(c) for c in u_tau_series(1, 4).coeffs] == [1, 0, 0, 0, 0]
    u2 = u_tau_series(2, 8)
    # z^2/(z^4 - z^2 + 1) = z^2 + z^4 - z^8 ...
    assert [int(c) for c in u2.coeffs] == [0, 0, 1, 0, 1, 0, 0, 0, -1]


def test_structure_substitution_valuations():
    for tau in (1, 2, 3):
        _, theta, theta_tilde = structure_substitutions(tau, 10)
        assert theta.valuation() == 2 * tau
        assert theta_tilde.valuation() == 2 * tau


def test_g_series_prefix(h1):
    g = G_series(1, 1, 12, h=H_series(1, 12))
    assert [int(c) for c in g.coeffs[:5]] == [1, 1, 1, 2, 5]


@pytest.mark.parametrize("tau,gamma", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_g_series_matches_oracle(shadows, tau, gamma):
    n = 12
    h = H_series(gamma, n, shadows=shadows)
    g = G_series(tau, gamma, n, h=h)
    gt = Gtilde_series(tau, gamma, n, h=h)
    for k in range(n + 1):
        assert int(g.coeffs[k]) == oracle.count_structures(tau, gamma, k, False), (tau, gamma, k)
        assert int(gt.coeffs[k]) == oracle.count_structures(tau, gamma, k, True), (tau, gamma, k)


def test_gtilde_small_values(shadows):
    gt = Gtilde_series(1, 1, 4, h=H_series(1, 4, shadows=shadows))
    assert [int(c) for c in gt.coeffs[:3]] == [1, 1, 2]


def test_a_series_specializes_to_g(h1):
    n = 10
    h = H_series(1, n)
    a = A_series(1, 1, n, n // 2, h=h)
    assert a.specialize_t(1) == G_series(1, 1, n, h=h)
    assert int(a.level(1).coeffs[3]) == 1
    # arcless structures: exactly one per length
    assert [int(c) for c in a.level(0).coeffs] == [1] * (n + 1)


def test_a_series_tau2(shadows):
    n = 10
    h = H_series(1, n, shadows=shadows)
    a = A_series(2, 1, n, n // 2, h=h)
    assert a.specialize_t(1) == G_series(2, 1, n, h=h)


def test_g_lambda_valuations():
    assert G_lambda_series(1, 0, 1, 8).valuation() == 2
    assert G_lambda_series(1, 1, 1, 8).valuation() == 3
    assert G_lambda_series(1, 0, 2, 8).valuation() == 4


def test_g_lambda_shape_sum(shadows):
    # summing the fixed-shape series over all shapes (grouped by arcs and
    # 1-arcs, plus the empty shape's isolated-vertex chain) rebuilds the
    # structure series
    order = 10
    for gamma in (1, 2):
        for tau in (1, 2):
            total = TruncSeries(order, [1] * (order + 1))  # empty shape: 1/(1-z)
            for s in range(1, order // (2 * tau) + 1):
                counts = oracle.count_shapes(gamma, s)
                for (arcs, one), c in counts.counts.items():
                    term = G_lambda_series(arcs, one, tau, order).scale(c)
                    total = total + term
            expected = G_series(tau, gamma, order, h=H_series(gamma, order, shadows=shadows))
            assert total == expected, (gamma, tau)


def test_compose_rejects_bad_inner(h1):
    with pytest.raises(NonzeroInnerConstant):
        h1.compose(TruncSeries(4, [1, 1]))

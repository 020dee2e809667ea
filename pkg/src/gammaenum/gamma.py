"""Counting series for genus-bounded matchings, shapes, and canonical structures.

The genus-bounded matching series H(u) is pinned down by the functional
equation

    H - u H^2 - sum_{g=1..gamma} I_g( u H^2 / (1 - u H^2) ) = 1,

whose unique power-series solution with H(0) = 1 is computed here by fixed
point iteration (one further coefficient locks in per round).  Clearing the
denominators w = 1 - u X^2 turns the equation into the defining polynomial

    P(u, X) = w^kappa (-1 + X - u X^2) - sum_g w^kappa I_g(u X^2 / w),

kappa = 6*gamma - 2, with P(u, H(u)) = 0; that polynomial drives the
singularity analysis in ``gammaenum.asym``.

Everything countable on a backbone follows from H by substitution:

* shapes, marked by 1-arcs:      S(u, e) = (1+u)/(1+2u-ue) * H(u(1+u)/(1+2u-ue)^2)
* canonical structures:          G(z)    = D^-1 * H(u_tau z^2 / D^2),  D = u_tau z^2 - z + 1
* structures allowing 1-arcs:    Gt(z)   = (1-z)^-1 * H(u_tau z^2/(1-z)^2)
* structures marked by arcs:     A(z, t) = same as G with u_tau(z, t)
* one fixed shape, inflated:     G_lambda(z) by stack/interval bookkeeping

with u_tau(z) = (z^2)^(tau-1) / (z^{2tau} - z^2 + 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import (
    FixedPointDivergence,
    NonIntegerCoefficient,
    ShadowSetIncomplete,
)
from .exact import (
    BiPoly,
    BiTruncSeries,
    Poly,
    TruncSeries,
    bipoly_eval_series,
    series_compose,
    series_inverse,
)
from .rational import ONE, Q, ZERO, is_integral
from .shadows import ShadowPolySet, shadow_set


@dataclass(frozen=True)
class GammaSystem:
    """Defining polynomial and shadow data for one genus bound."""

    gamma: int
    kappa: int
    P: BiPoly
    shadows: ShadowPolySet

    def P_u(self) -> BiPoly:
        return self.P.derivative_u()

    def P_X(self) -> BiPoly:
        return self.P.derivative_x()


def build_P(gamma: int, shadows: ShadowPolySet | None = None, cache_dir: Path | None = None) -> GammaSystem:
    """Assemble P(u, X) from the shadow polynomials I_1..I_gamma.

    Each shadow term I_g(uX^2/w) * w^kappa expands to
    sum_m i_g(m) (uX^2)^m w^(kappa-m), a polynomial because deg I_g <= kappa.
    Degree and leading-coefficient assertions guard the construction.
    """
    if gamma < 1:
        raise ValueError("gamma must be >= 1")
    if shadows is None:
        shadows = shadow_set(gamma, cache_dir=cache_dir)
    if shadows.g_max < gamma:
        raise ShadowSetIncomplete(f"need shadow polynomials up to genus {gamma}")
    kappa = 6 * gamma - 2

    w = BiPoly.from_terms({(0, 0): 1, (1, 2): -1})  # 1 - u X^2
    ux2 = BiPoly.from_terms({(1, 2): 1})
    w_pow = [BiPoly.from_terms({(0, 0): 1})]
    ux2_pow = [BiPoly.from_terms({(0, 0): 1})]
    for _ in range(kappa):
        w_pow.append(w_pow[-1] * w)
        ux2_pow.append(ux2_pow[-1] * ux2)

    P = w_pow[kappa] * BiPoly.from_terms({(0, 0): -1, (0, 1): 1, (1, 2): -1})
    for g in range(1, gamma + 1):
        ig = shadows.poly(g)
        for m in range(ig.degree + 1):
            c = ig[m]
            if c:
                P = P - (ux2_pow[m] * w_pow[kappa - m]).scale_poly(Poly([c]))

    expected_deg = 2 + 2 * kappa
    if P.degree_x != expected_deg:
        raise AssertionError(f"deg_X P = {P.degree_x}, expected {expected_deg}")
    lead = P.coeff_x(expected_deg)
    if lead != Poly([0] * (kappa + 1) + [-1]):
        raise AssertionError("leading X coefficient of P is not -u^(kappa+1)")
    if P.eval(ZERO, ONE) != 0:
        raise AssertionError("P(0, 1) != 0")
    return GammaSystem(gamma, kappa, P, shadows)


def _phi(h: TruncSeries, shadows: ShadowPolySet, gamma: int) -> TruncSeries:
    """One fixed-point round: 1 + u H^2 + sum_g I_g(u H^2 / (1 - u H^2))."""
    order = h.order
    uh2 = (h * h).shift(1)
    result = uh2.add_const(1)
    y = uh2 * series_inverse(uh2.scale(-1).add_const(1))
    for g in range(1, gamma + 1):
        result = result + series_compose(shadows.poly(g).to_series(order), y)
    return result


def H_series(
    gamma: int,
    order: int,
    shadows: ShadowPolySet | None = None,
    system: GammaSystem | None = None,
    check: bool = True,
) -> TruncSeries:
    """Genus-bounded matching counts by arcs, to the requested order.

    Fixed-point iteration on the defining equation: coefficient k of the
    iterate depends only on coefficients < k of the input, so working order
    ramps 1..order and each round fixes exactly one further coefficient.
    Every coefficient must come out a nonnegative integer, and the result is
    checked against the defining polynomial.
    """
    if gamma < 1:
        raise ValueError("gamma must be >= 1")
    if shadows is None:
        shadows = system.shadows if system is not None else shadow_set(gamma)
    coeffs = [ONE]
    for k in range(1, order + 1):
        current = TruncSeries(k, coeffs + [ZERO])
        nxt = _phi(current, shadows, gamma)
        if nxt.coeffs[:k] != current.coeffs[:k]:
            raise FixedPointDivergence(
                f"fixed-point iteration destabilized settled coefficients at order {k}"
            )
        c = nxt.coeffs[k]
        if not is_integral(c) or c < 0:
            raise NonIntegerCoefficient(f"h_{gamma}({k}) = {c} is not a nonnegative integer")
        coeffs.append(c)
    h = TruncSeries(order, coeffs)
    if check and order >= 1:
        if _phi(h, shadows, gamma) != h:
            raise FixedPointDivergence("computed series is not a fixed point")
        if system is not None:
            u = TruncSeries(order, [0, 1])
            if bipoly_eval_series(system.P, u, h) != TruncSeries.zero(order):
                raise FixedPointDivergence("P(u, H(u)) != 0 for the computed series")
    return h


# ---------------------------------------------------------------------------
# Shapes, bivariate in (arcs, 1-arcs)
# ---------------------------------------------------------------------------


def S_series(gamma: int, order: int, h: TruncSeries | None = None) -> BiTruncSeries:
    """Shape counts: coefficient of u^n e^m counts shapes with n arcs, m 1-arcs."""
    if h is None:
        h = H_series(gamma, order)
    t_order = order
    zero = TruncSeries.zero(order)
    # 1 + 2u - u e  as a series in u with 1-arc marker e
    denom = BiTruncSeries(order, [TruncSeries(order, [1, 2]), TruncSeries(order, [0, -1])]
                          + [zero] * (t_order - 1))
    inv = denom.inverse()
    u_1pu = BiTruncSeries(
        order, [TruncSeries(order, [0, 1, 1])] + [zero] * t_order
    )
    arg = u_1pu * inv * inv
    prefactor = BiTruncSeries(order, [TruncSeries(order, [1, 1])] + [zero] * t_order) * inv
    return prefactor * _compose_series_bivariate(h, arg)


def _compose_series_bivariate(outer: TruncSeries, inner: BiTruncSeries) -> BiTruncSeries:
    """Horner evaluation of a univariate series at a bivariate argument.

    The inner series must have positive valuation in the base variable at
    every marker level, so the truncated Horner sum is exact.
    """
    for level in inner.levels:
        if level.coeffs[0] != 0:
            raise ValueError("inner bivariate series must vanish at the base origin")
    result = BiTruncSeries.constant(inner.base_order, inner.t_order, 0)
    for c in reversed(outer.coeffs):
        result = result * inner
        if c:
            result = result.add_const(c)
    return result


# ---------------------------------------------------------------------------
# Canonical structures on a backbone
# ---------------------------------------------------------------------------


def u_tau_series(tau: int, order: int) -> TruncSeries:
    """(z^2)^(tau-1) / (z^{2tau} - z^2 + 1); constant term 1 at tau = 1."""
    if tau < 1:
        raise ValueError("tau must be >= 1")
    denom = [ONE] + [ZERO] * order
    if 2 <= order:
        denom[2] -= 1
    if 2 * tau <= order:
        denom[2 * tau] += 1
    numerator = TruncSeries(order, [ZERO] * (2 * tau - 2) + [ONE])
    return numerator * series_inverse(TruncSeries(order, denom))


def structure_substitutions(tau: int, order: int) -> tuple[TruncSeries, TruncSeries, TruncSeries]:
    """(u_tau z^2 - z + 1, inner argument theta_tau, 1-arc variant theta~_tau).

    theta_tau = u_tau z^2 / (u_tau z^2 - z + 1)^2 has valuation 2*tau;
    theta~_tau = u_tau z^2 / (1 - z)^2 likewise.
    """
    ut = u_tau_series(tau, order)
    utz2 = ut.shift(2)
    d = utz2 + TruncSeries(order, [1, -1])
    d_inv = series_inverse(d)
    theta = utz2 * d_inv * d_inv
    one_minus_z_inv = series_inverse(TruncSeries(order, [1, -1]))
    theta_tilde = utz2 * one_minus_z_inv * one_minus_z_inv
    if theta.valuation() < 2 * tau or theta_tilde.valuation() < 2 * tau:
        raise AssertionError("structure substitution lost its valuation")
    return d, theta, theta_tilde


def G_series(tau: int, gamma: int, order: int, h: TruncSeries | None = None) -> TruncSeries:
    """Counts of canonical structures (no 1-arcs) by backbone length."""
    if tau < 1 or gamma < 1:
        raise ValueError("tau and gamma must be >= 1")
    if h is None:
        h = H_series(gamma, order)
    d, theta, _ = structure_substitutions(tau, order)
    out = series_inverse(d) * series_compose(h, theta)
    _require_counting_series(out, f"G({tau},{gamma})")
    return out


def Gtilde_series(tau: int, gamma: int, order: int, h: TruncSeries | None = None) -> TruncSeries:
    """Counts of canonical diagrams with 1-arcs allowed, by backbone length.

    Carries the sequence-of-isolated-vertices prefactor 1/(1-z); without it the
    expansion undercounts (already at one vertex), as the brute-force oracle
    confirms.
    """
    if tau < 1 or gamma < 1:
        raise ValueError("tau and gamma must be >= 1")
    if h is None:
        h = H_series(gamma, order)
    _, _, theta_tilde = structure_substitutions(tau, order)
    prefactor = series_inverse(TruncSeries(order, [1, -1]))
    out = prefactor * series_compose(h, theta_tilde)
    _require_counting_series(out, f"Gt({tau},{gamma})")
    return out


def A_series(
    tau: int, gamma: int, order: int, t_order: int, h: TruncSeries | None = None
) -> BiTruncSeries:
    """Structures counted by backbone length (base) and number of arcs (marker t).

    Uses u_tau(z, t) = t (t z^2)^(tau-1) / ((t z^2)^tau - t z^2 + 1); setting
    t = 1 recovers G_series.
    """
    if tau < 1 or gamma < 1:
        raise ValueError("tau and gamma must be >= 1")
    if h is None:
        h = H_series(gamma, order)
    zero = TruncSeries.zero(order)

    def level_term(power_t: int, series: TruncSeries) -> BiTruncSeries:
        levels = [zero] * (t_order + 1)
        if power_t <= t_order:
            levels[power_t] = series
        return BiTruncSeries(order, levels)

    one = BiTruncSeries.constant(order, t_order, 1)
    z2 = TruncSeries(order, [0, 0, 1])
    # (t z^2)^tau - t z^2 + 1
    denom = one + level_term(tau, z2.pow(tau)) - level_term(1, z2)
    numerator = level_term(tau, z2.pow(tau - 1))  # t (t z^2)^(tau-1)
    ut = numerator * denom.inverse()
    utz2 = ut * level_term(0, z2)
    d = utz2 + level_term(0, TruncSeries(order, [1, -1]))
    d_inv = d.inverse()
    return d_inv * _compose_series_bivariate(h, utz2 * d_inv * d_inv)


def G_lambda_series(s: int, m: int, tau: int, order: int) -> TruncSeries:
    """Canonical no-1-arc diagrams of one fixed shape, counted by length.

    The shape has s >= 1 arcs, m of them 1-arcs; each arc inflates to a
    canonical stack with induced substructures, each 1-arc needs one stretch
    vertex, and free backbone positions absorb the rest:

        (1-z)^-1 * ( z^{2 tau} / ((1-z^2)(1-z)^2 - (2z - z^2) z^{2 tau}) )^s * z^m
    """
    if s < 1:
        raise ValueError("shape must have at least one arc")
    if not 0 <= m <= s:
        raise ValueError("1-arc count must lie between 0 and the arc count")
    if tau < 1:
        raise ValueError("tau must be >= 1")
    denom = [ZERO] * (order + 1)

    def add_poly(coeffs: list[tuple[int, int]]):
        for power, c in coeffs:
            if power <= order:
                denom[power] += c

    # (1-z^2)(1-z)^2 = 1 - 2z + 2z^3 - z^4
    add_poly([(0, 1), (1, -2), (3, 2), (4, -1)])
    # -(2z - z^2) z^{2 tau}
    add_poly([(2 * tau + 1, -2), (2 * tau + 2, 1)])
    core = TruncSeries(order, [ZERO] * (2 * tau) + [ONE]) * series_inverse(
        TruncSeries(order, denom)
    )
    out = series_inverse(TruncSeries(order, [1, -1])) * core.pow(s)
    return out.shift(m)


def _require_counting_series(series: TruncSeries, label: str) -> None:
    for k, c in enumerate(series.coeffs):
        if not is_integral(c) or c < 0:
            raise NonIntegerCoefficient(f"{label} coefficient {k} is {c}")

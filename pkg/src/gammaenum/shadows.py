"""Irreducible shadow polynomials I_g(z) by genus-peeling recursion.

An irreducible shadow of genus g has between 2g and 6g-2 arcs, so its counting
series I_g(z) is a polynomial.  The genus-g polynomial is obtained from the
genus-filtered matching series C_0..C_g through the substitution

    theta(z) = z(z+1) / (2z+1)^2,

which inverts y = z*C_0(z)^2 / (1 - z*C_0(z)^2):

    I_g(z) = C_g(theta) - theta * sum_{i=0..g} C_i(theta) C_{g-i}(theta)
             - sum_{j=1..g-1} [t^{g-j}] I_j( theta*B^2 / (1 - theta*B^2) ),

where B(z, t) = sum_{k=0..g-j} C_k(theta) t^k.  All arithmetic runs on exact
truncated series at order 6g+6; the extra orders past the degree bound 6g-2
expose any non-polynomial residue, which would signal a transcription bug.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .cache import load_poly, store_poly
from .errors import NonIntegerCoefficient, PolynomialityViolation
from .exact import BiTruncSeries, Poly, TruncSeries, series_compose, series_inverse
from .hz import HZTable, hz_table
from .rational import Q, as_integer, is_integral


@dataclass(frozen=True)
class ShadowPolySet:
    """Shadow polynomials I_1..I_{g_max}; valuation 2g and degree 6g-2 each."""

    g_max: int
    polys: dict = field(repr=False)

    def poly(self, g: int) -> Poly:
        if not 1 <= g <= self.g_max:
            raise KeyError(f"I_{g} not in set (g_max={self.g_max})")
        return self.polys[g]

    def count(self, g: int, m: int) -> int:
        """Number of irreducible shadows of genus g with m arcs."""
        return as_integer(self.poly(g)[m])


def theta_series(order: int) -> TruncSeries:
    """Exact expansion of z(z+1)/(2z+1)^2; valuation 1."""
    if order < 1:
        raise ValueError("theta needs order >= 1")
    numerator = TruncSeries(order, [0, 1, 1])
    denom = TruncSeries(order, [1, 2]) * TruncSeries(order, [1, 2])
    return numerator * series_inverse(denom)


def _marked_substitution(theta: TruncSeries, c_at_theta: list[TruncSeries], t_order: int) -> BiTruncSeries:
    """theta*B^2/(1 - theta*B^2) with B = sum_k C_k(theta) t^k, t-truncated."""
    order = theta.order
    b = BiTruncSeries(order, c_at_theta[: t_order + 1])
    lifted_theta = BiTruncSeries(order, [theta] + [TruncSeries.zero(order)] * t_order)
    theta_b2 = lifted_theta * b * b
    one_minus = BiTruncSeries.constant(order, t_order, 1) - theta_b2
    return theta_b2 * one_minus.inverse()


def I_poly(g: int, context: ShadowPolySet | None = None, table: HZTable | None = None) -> Poly:
    """Shadow polynomial of genus g; needs I_1..I_{g-1} in `context` when g > 1."""
    if g < 1:
        raise ValueError("shadow polynomials start at genus 1")
    if g > 1 and (context is None or context.g_max < g - 1):
        from .errors import ShadowSetIncomplete

        raise ShadowSetIncomplete(f"I_poly({g}) needs shadow polynomials up to {g - 1}")
    order = 6 * g + 6
    if table is None or table.g_max < g or table.m_max < order:
        table = hz_table(g, order)
    theta = theta_series(order)
    c_at_theta = [
        series_compose(TruncSeries(order, [Q(table.count(i, m)) for m in range(order + 1)]), theta)
        for i in range(g + 1)
    ]

    acc = c_at_theta[g]
    conv = TruncSeries.zero(order)
    for i in range(g + 1):
        conv = conv + c_at_theta[i] * c_at_theta[g - i]
    acc = acc - theta * conv
    for j in range(1, g):
        substituted = _marked_substitution(theta, c_at_theta, g - j)
        evaluated = substituted.compose_poly(context.poly(j))
        acc = acc - evaluated.level(g - j)

    for k in range(6 * g - 1, order + 1):
        if acc.coeffs[k] != 0:
            raise PolynomialityViolation(f"I_{g} has residue {acc.coeffs[k]} at degree {k}")
    for k in range(0, 2 * g):
        if acc.coeffs[k] != 0:
            raise PolynomialityViolation(f"I_{g} has low-order term at degree {k}")
    coeffs = acc.coeffs[: 6 * g - 1]
    if not all(is_integral(c) and c >= 0 for c in coeffs):
        raise NonIntegerCoefficient(f"I_{g} coefficients are not nonnegative integers")
    return Poly([as_integer(c) for c in coeffs])


def shadow_set(g_max: int, cache_dir: Path | None = None, use_cache: bool = True) -> ShadowPolySet:
    """I_1..I_{g_max}, consulting the disk cache before recomputing."""
    if g_max < 1:
        raise ValueError("g_max must be >= 1")
    table = hz_table(g_max, 6 * g_max + 6)
    polys: dict[int, Poly] = {}
    for g in range(1, g_max + 1):
        cached = load_poly(f"I_{g}", cache_dir) if use_cache else None
        if cached is not None:
            polys[g] = cached
            continue
        polys[g] = I_poly(g, ShadowPolySet(g - 1, dict(polys)), table)
        if use_cache:
            store_poly(f"I_{g}", polys[g], cache_dir)
    return ShadowPolySet(g_max, polys)

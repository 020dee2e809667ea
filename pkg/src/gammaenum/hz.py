"""Genus-filtered matching counts from the two-term integer recursion.

The number c_g(m) of perfect matchings of [2m] whose ribbon surface has genus g
satisfies

    (m+1) c_g(m) = 2(2m-1) c_g(m-1) + (2m-1)(m-1)(2m-3) c_{g-1}(m-2),

with c_0(0) = 1 and c_g(m) = 0 for 2g > m.  Genus 0 gives the Catalan numbers.
The module also extracts, for each g >= 1, the integer polynomial Q_g with

    C_g(z) = Q_g(z) * sqrt(1-4z) / (1-4z)^{3g},

which packages the whole genus-g counting series into 3g integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NonIntegralDivision, PolynomialityViolation
from .exact import Poly, TruncSeries, series_binomial_power
from .rational import Q, as_integer, is_integral


@dataclass(frozen=True)
class HZTable:
    """Complete table of c_g(m) for g <= g_max, m <= m_max."""

    g_max: int
    m_max: int
    c: dict = field(repr=False)

    def count(self, g: int, m: int) -> int:
        if g < 0 or m < 0 or 2 * g > m:
            return 0
        if g > self.g_max or m > self.m_max:
            raise KeyError(f"(g={g}, m={m}) outside table bounds")
        return self.c[(g, m)]

    def row_sum(self, m: int) -> int:
        return sum(self.count(g, m) for g in range(self.g_max + 1))


def hz_table(g_max: int, m_max: int) -> HZTable:
    """Fill the recursion table; every division by (m+1) must be exact."""
    if g_max < 0 or m_max < 0:
        raise ValueError("table bounds must be nonnegative")
    c: dict[tuple[int, int], int] = {}
    for m in range(m_max + 1):
        for g in range(g_max + 1):
            if 2 * g > m:
                c[(g, m)] = 0
            elif m == 0:
                c[(g, m)] = 1 if g == 0 else 0
            else:
                total = 2 * (2 * m - 1) * c.get((g, m - 1), 0)
                if g >= 1 and m >= 2:
                    total += (2 * m - 1) * (m - 1) * (2 * m - 3) * c.get((g - 1, m - 2), 0)
                q, r = divmod(total, m + 1)
                if r:
                    raise NonIntegralDivision(
                        f"recursion value {total} not divisible by {m + 1} at (g={g}, m={m})"
                    )
                c[(g, m)] = q
    return HZTable(g_max, m_max, c)


def C_series(g: int, order: int, table: HZTable | None = None) -> TruncSeries:
    """Counting series of genus-g matchings by arcs, truncated at `order`."""
    if table is None or table.g_max < g or table.m_max < order:
        table = hz_table(g, order)
    return TruncSeries(order, [Q(table.count(g, m)) for m in range(order + 1)])


def double_factorial(m: int) -> int:
    """(2m-1)!!, the total number of perfect matchings of [2m]."""
    out = 1
    for k in range(2 * m - 1, 0, -2):
        out *= k
    return out


def store_table(table: HZTable, directory=None) -> None:
    """Persist a recursion table as JSON under the shared cache directory."""
    import json

    from .cache import cache_dir

    path = cache_dir(directory) / f"hz_{table.g_max}_{table.m_max}.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {
        "g_max": table.g_max,
        "m_max": table.m_max,
        "c_g_m": {f"{g},{m}": str(v) for (g, m), v in sorted(table.c.items())},
    }
    path.write_text(json.dumps(payload, indent=0, sort_keys=True) + "\n")


def load_table(g_max: int, m_max: int, directory=None) -> HZTable | None:
    import json

    from .cache import cache_dir

    path = cache_dir(directory) / f"hz_{g_max}_{m_max}.json"
    if not path.exists():
        return None
    payload = json.loads(path.read_text())
    c = {}
    for key, value in payload["c_g_m"].items():
        g, m = key.split(",")
        c[(int(g), int(m))] = int(value)
    return HZTable(payload["g_max"], payload["m_max"], c)


def Q_poly(g: int, table: HZTable | None = None) -> Poly:
    """Extract Q_g by multiplying the genus-g series with (1-4z)^(3g - 1/2).

    Eight orders of slack past the degree bound 3g-1 distinguish a true
    polynomial from coincidental zero coefficients.  The result is checked to
    have integer coefficients, valuation 2g, and a nonzero value at 1/4.
    """
    if g < 1:
        raise ValueError("Q_poly is defined for g >= 1")
    order = 3 * g + 8
    series = C_series(g, order, table)
    product = series * series_binomial_power(-4, Q(6 * g - 1, 2), order)
    for k in range(3 * g, order + 1):
        if product.coeffs[k] != 0:
            raise PolynomialityViolation(
                f"degree-{k} term {product.coeffs[k]} after clearing the branch factor (g={g})"
            )
    for k in range(0, 2 * g):
        if product.coeffs[k] != 0:
            raise PolynomialityViolation(f"unexpected low-order term at degree {k} (g={g})")
    coeffs = product.coeffs[: 3 * g]
    if not all(is_integral(c) for c in coeffs):
        raise PolynomialityViolation(f"non-integer coefficient in Q_{g}")
    poly = Poly([as_integer(c) for c in coeffs])
    if poly(Q(1, 4)) == 0:
        raise PolynomialityViolation(f"Q_{g}(1/4) vanished")
    return poly

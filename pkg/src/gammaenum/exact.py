"""Exact polynomials and truncated power series over the rationals.

Every generating function in this package is carried by one of four dense,
immutable value types:

* ``Poly``           -- univariate polynomial, coefficient list indexed by degree.
* ``TruncSeries``    -- power series known exactly up to an explicit order ``N``;
                        coefficients beyond ``N`` are *unknown*, never zero-filled.
* ``BiPoly``         -- polynomial in two variables ``(u, X)``, stored X-major as
                        a list of ``Poly`` in ``u``.
* ``BiTruncSeries``  -- series in a marker variable ``t`` whose coefficients are
                        ``TruncSeries`` in the base variable, all at one base order.

Arithmetic is exact: results carry the minimum order of their inputs, and
recomputing at a higher order reproduces lower-order prefixes bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NonzeroInnerConstant, ZeroConstantTerm
from .rational import ONE, Q, ZERO, from_string, to_string


def _coerce(values: Iterable) -> tuple:
    return tuple(Q(v) for v in values)


# ---------------------------------------------------------------------------
# Poly
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Poly:
    """Dense univariate polynomial; ``coeffs[k]`` is the coefficient of x^k.

    Normalized on construction: trailing zero coefficients are stripped, so the
    zero polynomial has an empty coefficient tuple and degree -1.
    """

    coeffs: tuple

    def __init__(self, coeffs: Iterable = ()):
        cs = list(_coerce(coeffs))
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[k] + other[k] for k in range(n)])

    def __sub__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[k] - other[k] for k in range(n)])

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero or other.is_zero:
            return Poly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return Poly(out)

    def scale(self, k) -> "Poly":
        k = Q(k)
        return Poly([c * k for c in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return Poly((ZERO,) * k + self.coeffs)

    def __call__(self, x):
        """Exact evaluation by Horner's scheme."""
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def pow(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Poly([ONE])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Euclidean division over the rationals."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        quot = [ZERO] * (dq + 1) if dq >= 0 else []
        inv_lc = ONE / other.coeffs[-1]
        while len(rem) >= len(other.coeffs) and rem:
            d = len(rem) - len(other.coeffs)
            c = rem[-1] * inv_lc
            quot[d] = c
            for i, b in enumerate(other.coeffs):
                rem[i + d] -= c * b
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(quot), Poly(rem)

    def divides(self, other: "Poly") -> bool:
        """True iff self divides other exactly."""
        if self.is_zero:
            return other.is_zero
        _, r = other.divmod(self)
        return r.is_zero

    def valuation(self) -> int:
        """Index of the lowest nonzero coefficient (-1 for the zero polynomial)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    def to_series(self, order: int) -> "TruncSeries":
        return TruncSeries(order, self.coeffs[: order + 1])

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                if k == 0:
                    parts.append(to_string(c))
                elif k == 1:
                    parts.append(f"{to_string(c)}*z")
                else:
                    parts.append(f"{to_string(c)}*z^{k}")
        return " + ".join(parts)


def poly_from_strings(strings: Sequence[str]) -> Poly:
    return Poly([from_string(s) for s in strings])


def coeff_strings(obj) -> list[str]:
    """JSON-ready coefficient list: exact decimal strings, index = exponent."""
    return [to_string(c) for c in obj.coeffs]


# ---------------------------------------------------------------------------
# TruncSeries
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TruncSeries:
    """Power series with coefficients known exactly for exponents 0..order.

    ``coeffs`` always has length ``order + 1``; short inputs are zero-padded
    (the padding states a known-zero coefficient, not a fabricated one: callers
    construct series from data that is exact at every listed exponent).
    """

    order: int
    coeffs: tuple

    def __init__(self, order: int, coeffs: Iterable = ()):
        if order < 0:
            raise ValueError("series order must be >= 0")
        cs = list(_coerce(coeffs))
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        cs.extend([ZERO] * (order + 1 - len(cs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls(order, (ONE,))

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls(order)

    def __getitem__(self, k: int):
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def valuation(self) -> int:
        """Lowest known nonzero exponent; order+1 if all known coefficients vanish."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self.order + 1

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries(order, self.coeffs[: order + 1])

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        n = min(self.order, other.order)
        return TruncSeries(n, [self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        n = min(self.order, other.order)
        return TruncSeries(n, [self.coeffs[k] - other.coeffs[k] for k in range(n + 1)])

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(self.order, [-c for c in self.coeffs])

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        n = min(self.order, other.order)
        out = [ZERO] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a:
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return TruncSeries(n, out)

    def scale(self, k) -> "TruncSeries":
        k = Q(k)
        return TruncSeries(self.order, [c * k for c in self.coeffs])

    def add_const(self, k) -> "TruncSeries":
        cs = list(self.coeffs)
        cs[0] += Q(k)
        return TruncSeries(self.order, cs)

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by z^k, keeping the truncation order."""
        if k > self.order:
            return TruncSeries.zero(self.order)
        return TruncSeries(self.order, (ZERO,) * k + self.coeffs[: self.order + 1 - k])

    def pow(self, e: int) -> "TruncSeries":
        if e < 0:
            raise ValueError("negative series power; use inverse() first")
        result = TruncSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse; requires a nonzero constant term.

        Standard recurrence: b0 = 1/a0, b_n = -(sum_{k>=1} a_k b_{n-k}) / a0.
        """
        a = self.coeffs
        if a[0] == 0:
            raise ZeroConstantTerm("series has zero constant term")
        inv0 = ONE / a[0]
        out = [ZERO] * (self.order + 1)
        out[0] = inv0
        for n in range(1, self.order + 1):
            s = ZERO
            for k in range(1, n + 1):
                if a[k]:
                    s += a[k] * out[n - k]
            out[n] = -s * inv0
        return TruncSeries(self.order, out)

    def compose(self, inner: "TruncSeries") -> "TruncSeries":
        """Exact composition self(inner(z)), truncated at inner's order.

        Requires inner(0) = 0.  Coefficient n of the result depends only on
        coefficients 0..n of the outer series and 1..n of the inner one, so the
        outer series must be known at least to order(inner) // valuation(inner).
        """
        n = inner.order
        if inner.coeffs[0] != 0:
            raise NonzeroInnerConstant("inner series must have zero constant term")
        val = inner.valuation()
        needed = n // val if val <= n else 0
        if self.order < needed:
            raise ValueError(
                f"outer series order {self.order} too small: composition to order "
                f"{n} with inner valuation {val} needs outer order {needed}"
            )
        result = TruncSeries.zero(n)
        for c in reversed(self.coeffs[: min(self.order, n) + 1]):
            result = result * inner
            if c:
                result = result.add_const(c)
        return result

    def __str__(self) -> str:
        shown = ", ".join(to_string(c) for c in self.coeffs[: min(self.order, 10) + 1])
        tail = ", ..." if self.order > 10 else ""
        return f"TruncSeries[0..{self.order}]({shown}{tail})"


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product truncated at min(order(a), order(b))."""
    return a * b


def series_inverse(a: TruncSeries) -> TruncSeries:
    return a.inverse()


def series_compose(outer: TruncSeries, inner: TruncSeries) -> TruncSeries:
    return outer.compose(inner)


def series_binomial_power(c, alpha, order: int) -> TruncSeries:
    """Series of (1 + c*z)^alpha via the generalized binomial theorem.

    Coefficients are binom(alpha, k) * c^k, built by the exact recurrence
    b_k = b_{k-1} * c * (alpha - k + 1) / k.
    """
    c = Q(c)
    alpha = Q(alpha)
    out = [ONE]
    for k in range(1, order + 1):
        out.append(out[-1] * c * (alpha - k + 1) / k)
    return TruncSeries(order, out)


def series_from_strings(order: int, strings: Sequence[str]) -> TruncSeries:
    return TruncSeries(order, [from_string(s) for s in strings])


# ---------------------------------------------------------------------------
# BiPoly
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BiPoly:
    """Polynomial in (u, X): ``xcoeffs[j]`` is the Poly-in-u coefficient of X^j."""

    xcoeffs: tuple

    def __init__(self, xcoeffs: Iterable = ()):
        cs = [c if isinstance(c, Poly) else Poly(c) for c in xcoeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "xcoeffs", tuple(cs))

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int], object]) -> "BiPoly":
        """Build from {(u_power, x_power): coefficient}."""
        if not terms:
            return cls()
        dx = max(x for _, x in terms)
        cols: list[dict[int, object]] = [{} for _ in range(dx + 1)]
        for (du, dxp), c in terms.items():
            cols[dxp][du] = c
        polys = []
        for col in cols:
            if col:
                du = max(col)
                polys.append(Poly([col.get(k, 0) for k in range(du + 1)]))
            else:
                polys.append(Poly())
        return cls(polys)

    @property
    def degree_x(self) -> int:
        return len(self.xcoeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.xcoeffs

    def coeff_x(self, j: int) -> Poly:
        return self.xcoeffs[j] if 0 <= j < len(self.xcoeffs) else Poly()

    def __add__(self, other: "BiPoly") -> "BiPoly":
        n = max(len(self.xcoeffs), len(other.xcoeffs))
        return BiPoly([self.coeff_x(j) + other.coeff_x(j) for j in range(n)])

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        n = max(len(self.xcoeffs), len(other.xcoeffs))
        return BiPoly([self.coeff_x(j) - other.coeff_x(j) for j in range(n)])

    def __neg__(self) -> "BiPoly":
        return BiPoly([-p for p in self.xcoeffs])

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        if self.is_zero or other.is_zero:
            return BiPoly()
        out = [Poly() for _ in range(len(self.xcoeffs) + len(other.xcoeffs) - 1)]
        for i, a in enumerate(self.xcoeffs):
            if not a.is_zero:
                for j, b in enumerate(other.xcoeffs):
                    if not b.is_zero:
                        out[i + j] = out[i + j] + a * b
        return BiPoly(out)

    def scale_poly(self, p: Poly) -> "BiPoly":
        return BiPoly([c * p for c in self.xcoeffs])

    def pow(self, e: int) -> "BiPoly":
        if e < 0:
            raise ValueError("negative power")
        result = BiPoly([Poly([ONE])])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def derivative_x(self) -> "BiPoly":
        return BiPoly([p.scale(j) for j, p in enumerate(self.xcoeffs)][1:])

    def derivative_u(self) -> "BiPoly":
        return BiPoly([p.derivative() for p in self.xcoeffs])

    def eval(self, u_val, x_val):
        """Exact scalar evaluation at rational (u, X)."""
        acc = ZERO
        for p in reversed(self.xcoeffs):
            acc = acc * x_val + p(u_val)
        return acc

    def eval_x_at_u(self, u_val) -> Poly:
        """Specialize u, returning the univariate polynomial in X."""
        return Poly([p(u_val) for p in self.xcoeffs])


def bipoly_eval_series(p: BiPoly, u_val: TruncSeries, x_val: TruncSeries) -> TruncSeries:
    """Evaluate p(u, X) at series arguments, truncated at their common order."""
    order = min(u_val.order, x_val.order)
    u_val = u_val.truncate(order)
    x_val = x_val.truncate(order)
    result = TruncSeries.zero(order)
    for poly in reversed(p.xcoeffs):
        result = result * x_val
        if not poly.is_zero:
            # Horner in u for the coefficient polynomial
            coeff = TruncSeries.zero(order)
            for c in reversed(poly.coeffs):
                coeff = coeff * u_val
                if c:
                    coeff = coeff.add_const(c)
            result = result + coeff
    return result


# ---------------------------------------------------------------------------
# BiTruncSeries
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BiTruncSeries:
    """Series in a marker t with TruncSeries coefficients in the base variable.

    ``levels[k]`` is the coefficient of t^k; every level carries the same base
    order.  t itself is truncated at ``t_order = len(levels) - 1``.
    """

    base_order: int
    levels: tuple

    def __init__(self, base_order: int, levels: Iterable):
        lv = []
        for s in levels:
            if not isinstance(s, TruncSeries):
                s = TruncSeries(base_order, s)
            if s.order != base_order:
                s = s.truncate(base_order)
            lv.append(s)
        if not lv:
            lv = [TruncSeries.zero(base_order)]
        object.__setattr__(self, "base_order", base_order)
        object.__setattr__(self, "levels", tuple(lv))

    @classmethod
    def constant(cls, base_order: int, t_order: int, value) -> "BiTruncSeries":
        lv = [TruncSeries(base_order, (value,))]
        lv += [TruncSeries.zero(base_order) for _ in range(t_order)]
        return cls(base_order, lv)

    @property
    def t_order(self) -> int:
        return len(self.levels) - 1

    def level(self, k: int) -> TruncSeries:
        if not 0 <= k <= self.t_order:
            raise IndexError(f"marker power {k} beyond truncation {self.t_order}")
        return self.levels[k]

    def __add__(self, other: "BiTruncSeries") -> "BiTruncSeries":
        n = min(self.base_order, other.base_order)
        t = min(self.t_order, other.t_order)
        return BiTruncSeries(
            n, [self.levels[k].truncate(n) + other.levels[k].truncate(n) for k in range(t + 1)]
        )

    def __sub__(self, other: "BiTruncSeries") -> "BiTruncSeries":
        return self + other.scale(Q(-1))

    def __mul__(self, other: "BiTruncSeries") -> "BiTruncSeries":
        n = min(self.base_order, other.base_order)
        t = min(self.t_order, other.t_order)
        out = [TruncSeries.zero(n) for _ in range(t + 1)]
        for i, a in enumerate(self.levels[: t + 1]):
            a = a.truncate(n)
            for j in range(t + 1 - i):
                b = other.levels[j].truncate(n)
                out[i + j] = out[i + j] + a * b
        return BiTruncSeries(n, out)

    def scale(self, k) -> "BiTruncSeries":
        return BiTruncSeries(self.base_order, [s.scale(k) for s in self.levels])

    def add_const(self, k) -> "BiTruncSeries":
        lv = list(self.levels)
        lv[0] = lv[0].add_const(k)
        return BiTruncSeries(self.base_order, lv)

    def inverse(self) -> "BiTruncSeries":
        """Inverse when the t^0 level is invertible as a base-variable series."""
        b0 = self.levels[0].inverse()
        out = [b0]
        neg_b0 = -b0
        for k in range(1, self.t_order + 1):
            s = TruncSeries.zero(self.base_order)
            for i in range(1, k + 1):
                s = s + self.levels[i] * out[k - i]
            out.append(s * neg_b0)
        return BiTruncSeries(self.base_order, out)

    def compose_poly(self, poly: Poly) -> "BiTruncSeries":
        """Evaluate a univariate polynomial at this bivariate series (Horner)."""
        result = BiTruncSeries.constant(self.base_order, self.t_order, ZERO)
        for c in reversed(poly.coeffs):
            result = result * self
            if c:
                result = result.add_const(c)
        return result

    def specialize_t(self, value) -> TruncSeries:
        """Substitute a rational for the marker variable."""
        value = Q(value)
        acc = TruncSeries.zero(self.base_order)
        for s in reversed(self.levels):
            acc = acc.scale(value) + s
        return acc

"""Singularity analysis: discriminants, real roots, and coefficient asymptotics.

The genus-bounded matching series y = H(u) satisfies P(u, y) = 0 for the
defining polynomial built in ``gammaenum.gamma``.  Its dominant singularity
rho is located among the positive roots of the discriminant-style resultant

    Delta(u) = Res_X( P(u, X), dP/dX(u, X) ),

selected by consistency with a coefficient-ratio estimate, and refined by
exact bisection.  At (rho, pi = y(rho)) the local behaviour is a square-root
branch  y = pi + lambda (rho - u)^(1/2) + O(rho - u)  provided

    P(rho, pi) = 0,  P_X(rho, pi) = 0,  P_u(rho, pi) != 0,  P_XX(rho, pi) != 0;

these four conditions are certified with interval arithmetic over rational
enclosures.  The transfer to coefficients reads

    [u^n] y(u) ~ c n^(-3/2) rho^(-n),
    lambda = -sqrt(2 P_u / P_XX),   c = (-lambda) sqrt(rho) / (2 sqrt(pi)).

Exponential growth rates of structure counts follow the supercritical
pattern: solve theta_tau(z) = rho for the smallest positive z; the growth
rate is 1/z.

Certified work (root isolation, refinement, condition checks) runs entirely
on exact rationals; floating point appears only in the initial ratio
heuristics and in the reported constants (mpmath at 96-bit precision).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import mpmath

from .cache import load_poly, store_poly
from .errors import ConditionViolated, NoConsistentRoot, NoRootBeforePole
from .exact import BiPoly, Poly, TruncSeries
from .gamma import GammaSystem, H_series, build_P
from .rational import ONE, Q, ZERO, from_float

MP_PREC_BITS = 96


# ---------------------------------------------------------------------------
# Resultants: subresultant polynomial remainder sequence over Z[u]
# ---------------------------------------------------------------------------
#
# X-polynomials are lists of coefficient u-polynomials; u-polynomials are
# lists of plain ints.  The convention is the textbook one: the determinant
# of the Sylvester matrix with rows of descending coefficients, equivalently
# lc(P)^deg(Q) * prod P(beta) over the roots beta of Q.  In particular
# Res(X^2 - u, 2X) = -4u (its sign-flipped cousin 4u is the discriminant).


def _ip_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _ip_add(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _ip_trim(out)


def _ip_neg(a: list) -> list:
    return [-c for c in a]


def _ip_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return out


def _ip_pow(a: list, e: int) -> list:
    out = [1]
    for _ in range(e):
        out = _ip_mul(out, a)
    return out


def _ip_divexact(a: list, b: list) -> list:
    """Exact division in Z[u]; raises if a remainder is left."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    rem = list(a)
    _ip_trim(rem)
    if not rem:
        return []
    if len(rem) < len(b):
        raise ArithmeticError("inexact polynomial division")
    quot = [0] * (len(rem) - len(b) + 1)
    while rem and len(rem) >= len(b):
        c, r = divmod(rem[-1], b[-1])
        if r:
            raise ArithmeticError("inexact polynomial division")
        d = len(rem) - len(b)
        quot[d] = c
        for i, cb in enumerate(b):
            rem[i + d] -= c * cb
        _ip_trim(rem)
    if _ip_trim(rem):
        raise ArithmeticError("inexact polynomial division")
    return quot


def _xp_trim(f: list) -> list:
    while f and not f[-1]:
        f.pop()
    return f


def _xp_scale(f: list, p: list) -> list:
    return _xp_trim([_ip_mul(c, p) for c in f])


def _xp_sub(f: list, g: list) -> list:
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else []
        b = g[i] if i < len(g) else []
        out.append(_ip_add(a, _ip_neg(b)))
    return _xp_trim(out)


def _xp_prem(f: list, g: list) -> list:
    """Pseudo-remainder of lc(g)^(deg f - deg g + 1) * f modulo g, in X."""
    dg = len(g) - 1
    lc_g = g[-1]
    rem = [list(c) for c in f]
    steps = len(f) - 1 - dg + 1
    while rem and len(rem) - 1 >= dg:
        d = len(rem) - 1 - dg
        lc_r = rem[-1]
        rem = _xp_scale(rem, lc_g)
        shifted = [[] for _ in range(d)] + [list(c) for c in g]
        rem = _xp_sub(rem, _xp_scale(shifted, lc_r))
        steps -= 1
    for _ in range(steps):
        rem = _xp_scale(rem, lc_g)
    return rem


def _resultant_descending(f: list, g: list) -> list:
    """Subresultant-chain resultant in the descending (textbook) convention."""
    f = _xp_trim([list(c) for c in f])
    g = _xp_trim([list(c) for c in g])
    if not f or not g:
        return []
    df = len(f) - 1
    dg = len(g) - 1
    if df < dg:
        res = _resultant_descending(g, f)
        return res if (df * dg) % 2 == 0 else _ip_neg(res)
    if dg == 0:
        return _ip_pow(g[0], df)
    sign = 1
    lead = [1]
    h = [1]
    a, b = f, g
    while True:
        da = len(a) - 1
        db = len(b) - 1
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            sign = -sign
        rem = _xp_prem(a, b)
        if not rem:
            return []  # common factor of positive X-degree
        denom = _ip_mul(lead, _ip_pow(h, delta))
        rem = _xp_trim([_ip_divexact(c, denom) for c in rem])
        a, b = b, rem
        lead = a[-1]
        if delta > 0:
            h = _ip_divexact(_ip_pow(lead, delta), _ip_pow(h, delta - 1))
        if len(b) - 1 == 0:
            da = len(a) - 1
            num = _ip_pow(b[0], da)
            res = _ip_divexact(num, _ip_pow(h, da - 1))
            return res if sign == 1 else _ip_neg(res)


def _bipoly_to_int_lists(p: BiPoly) -> tuple[list, int]:
    """Clear denominators; returns (X-major int coefficient lists, scale factor)."""
    scale = 1
    for poly in p.xcoeffs:
        for c in poly.coeffs:
            d = int(c.denominator)
            if d != 1:
                g = _gcd(scale, d)
                scale = scale // g * d
    out = []
    for poly in p.xcoeffs:
        out.append([int(c.numerator) * (scale // int(c.denominator)) for c in poly.coeffs])
    return _xp_trim(out), scale


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def sylvester_matrix(p: BiPoly, q: BiPoly) -> list[list[Poly]]:
    """Sylvester matrix of p, q in X (standard descending-coefficient rows)."""
    dp, dq = p.degree_x, q.degree_x
    size = dp + dq
    rows = []
    for shift in range(dq):
        row = [Poly() for _ in range(size)]
        for j in range(dp + 1):
            row[shift + j] = p.coeff_x(dp - j)
        rows.append(row)
    for shift in range(dp):
        row = [Poly() for _ in range(size)]
        for j in range(dq + 1):
            row[shift + j] = q.coeff_x(dq - j)
        rows.append(row)
    return rows


def resultant(p: BiPoly, q: BiPoly) -> Poly:
    """Resultant of p and q with respect to X, as a polynomial in u.

    Computed by a fraction-free subresultant remainder sequence over Z[u]
    after clearing denominators; equals the determinant of
    ``sylvester_matrix(p, q)``.
    """
    if p.is_zero or q.is_zero:
        raise ValueError("resultant of a zero polynomial")
    fp, sp = _bipoly_to_int_lists(p)
    fq, sq = _bipoly_to_int_lists(q)
    dp = len(fp) - 1
    dq = len(fq) - 1
    res = _resultant_descending(fp, fq)
    denom = Q(sp) ** dq * Q(sq) ** dp
    return Poly([Q(c) / denom for c in res])


# ---------------------------------------------------------------------------
# Real root isolation (Sturm chains over exact rationals)
# ---------------------------------------------------------------------------


def _strip_zero_root(p: Poly) -> Poly:
    v = p.valuation()
    return Poly(p.coeffs[v:]) if v > 0 else p


def _sturm_chain(p: Poly) -> tuple[Poly, ...]:
    """Canonical Sturm chain, content-normalized to tame coefficient growth."""
    chain = [_normalize_sign_free(p), _normalize_sign_free(p.derivative())]
    while not chain[-1].is_zero:
        _, rem = chain[-2].divmod(chain[-1])
        chain.append(_normalize_sign_free(-rem))
    chain.pop()
    return tuple(chain)


def _normalize_sign_free(p: Poly) -> Poly:
    """Divide by the positive content (max |coeff| heuristic keeps it cheap)."""
    if p.is_zero:
        return p
    scale = max(abs(c) for c in p.coeffs if c)
    return p.scale(ONE / scale)


def _variations(chain, x) -> int:
    signs = []
    for poly in chain:
        v = poly(x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_roots(chain, a, b) -> int:
    """Distinct real roots in the half-open interval (a, b]."""
    return _variations(chain, a) - _variations(chain, b)


@dataclass(frozen=True)
class RootEnclosure:
    """Interval (low, high) certified to contain exactly one real root of poly."""

    poly: Poly
    low: object
    high: object
    chain: tuple = field(repr=False, compare=False, default=())

    def __post_init__(self):
        if not self.low < self.high:
            raise ValueError("enclosure needs low < high")
        chain = self.chain or _sturm_chain(self.poly)
        object.__setattr__(self, "chain", chain)
        if _count_roots(chain, self.low, self.high) != 1:
            raise ValueError("interval does not isolate exactly one root")

    @property
    def width(self):
        return self.high - self.low

    @property
    def midpoint(self):
        return (self.low + self.high) / 2

    def has_sign_change(self) -> bool:
        return self.poly(self.low) * self.poly(self.high) < 0

    def refine(self, width) -> "RootEnclosure":
        """Shrink by bisection to the requested width; always nests."""
        lo, hi = self.low, self.high
        v_lo = _variations(self.chain, lo)
        while hi - lo > width:
            mid = (lo + hi) / 2
            if self.poly(mid) == 0:
                # exact rational root: tighten straight onto it
                quarter = (hi - lo) / 4
                lo, hi = mid - min(quarter, width / 2), mid + min(quarter, width / 2)
                break
            v_mid = _variations(self.chain, mid)
            if v_lo - v_mid == 1:
                hi = mid
            else:
                lo, v_lo = mid, v_mid
        return RootEnclosure(self.poly, lo, hi, self.chain)

    def contains(self, x) -> bool:
        return self.low < x < self.high


def isolate_positive_roots(p: Poly) -> list[RootEnclosure]:
    """Disjoint isolating intervals for every positive real root, ascending.

    Roots at u = 0 are stripped first; Sturm counts drive the bisection, so
    multiple roots are isolated (not refined away) as well.
    """
    if p.is_zero:
        raise ValueError("cannot isolate roots of the zero polynomial")
    work = _strip_zero_root(p)
    if work.degree == 0:
        return []
    chain = _sturm_chain(work)
    lead = abs(work.coeffs[-1])
    bound = ONE + max(abs(c) for c in work.coeffs) / lead
    out: list[RootEnclosure] = []

    def split(a, b, count):
        if count == 0:
            return
        if count == 1:
            out.append(RootEnclosure(work, a, b, chain))
            return
        mid = (a + b) / 2
        attempt = 0
        while work(mid) == 0:
            # move the cut off an exact root so both halves stay half-open
            attempt += 1
            mid = a + (b - a) * Q(2 * attempt + 1, 4 * attempt + 4)
        left = _count_roots(chain, a, mid)
        split(a, mid, left)
        split(mid, b, count - left)

    split(ZERO, bound, _count_roots(chain, ZERO, bound))
    out.sort(key=lambda e: e.low)
    return out


# ---------------------------------------------------------------------------
# Interval evaluation (rigorous sign certificates)
# ---------------------------------------------------------------------------


def _iv_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _iv_mul(a, b):
    ps = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(ps), max(ps))


def interval_eval_bipoly(p: BiPoly, u_iv, x_iv):
    """Rigorous enclosure of p over the box u_iv x x_iv (interval Horner)."""
    acc = (ZERO, ZERO)
    for poly in reversed(p.xcoeffs):
        acc = _iv_mul(acc, x_iv)
        coeff = (ZERO, ZERO)
        for c in reversed(poly.coeffs):
            coeff = _iv_mul(coeff, u_iv)
            coeff = _iv_add(coeff, (c, c))
        acc = _iv_add(acc, coeff)
    return acc


def interval_eval_poly(p: Poly, x_iv):
    acc = (ZERO, ZERO)
    for c in reversed(p.coeffs):
        acc = _iv_mul(acc, x_iv)
        acc = _iv_add(acc, (c, c))
    return acc


def _iv_excludes_zero(iv) -> bool:
    return iv[0] > 0 or iv[1] < 0


# ---------------------------------------------------------------------------
# Dominant singularity of the genus-bounded matching series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AsymData:
    """Certified singularity data for one algebraic counting series."""

    gamma: int
    rho: RootEnclosure
    pi: RootEnclosure
    pi_val: object  # mpmath floats at 96-bit precision
    lambda_val: object
    c_val: object
    growth: object

    def growth_bounds(self):
        return (ONE / self.rho.high, ONE / self.rho.low)


def ratio_estimate(series: TruncSeries):
    """Float estimate of the singularity from the tail coefficient ratio.

    h(n-1)/h(n) tends to rho like 1 + 3/(2n); the (1 - 1/n)^(3/2) correction
    cancels that first-order term.  Heuristic only: every consumer re-certifies
    against exact data.
    """
    n = series.order
    r = float(series.coeffs[n - 1] / series.coeffs[n])
    return r * (1.0 - 1.0 / n) ** 1.5


def _delta_poly(system: GammaSystem, cache_dir: Path | None = None, use_cache: bool = True) -> Poly:
    name = f"Delta_{system.gamma}"
    if use_cache:
        cached = load_poly(name, cache_dir)
        if cached is not None:
            return cached
    delta = resultant(system.P, system.P_X())
    if use_cache:
        store_poly(name, delta, cache_dir)
    return delta


def algebraic_singularity(
    phi: BiPoly,
    series: TruncSeries,
    precision,
    label: int = 0,
    delta: Poly | None = None,
) -> AsymData:
    """Locate and certify the square-root singularity of a series solving phi.

    Steps: resultant, ratio estimate, consistent-root selection, bisection
    refinement, branch solve for pi on dPhi/dX, interval certification of the
    four expansion conditions, and the transfer constants.
    """
    precision = Q(precision)
    if delta is None:
        delta = resultant(phi, phi.derivative_x())
    if delta.is_zero:
        raise NoConsistentRoot("resultant vanished identically")
    est = ratio_estimate(series)
    window = (from_float(est) - Q(1, 1000), from_float(est) + Q(1, 1000))

    enclosures = isolate_positive_roots(delta)
    candidates = []
    for enc in enclosures:
        enc = enc.refine(Q(1, 4000))
        if enc.high > window[0] and enc.low < window[1]:
            candidates.append(enc)
    if len(candidates) != 1:
        raise NoConsistentRoot(
            f"{len(candidates)} discriminant roots within 1e-3 of ratio estimate {est:.6f}"
        )
    rho = candidates[0].refine(precision)

    # pi solves dPhi/dX(rho, X) = 0; seed the search from the series value just
    # inside the disk to stay on the combinatorial branch.
    phi_x = phi.derivative_x()
    rho_hat = rho.midpoint
    u_star = rho_hat * Q(999, 1000)
    x0 = ZERO
    for c in reversed(series.coeffs):
        x0 = x0 * u_star + c
    px = phi_x.eval_x_at_u(rho_hat)
    pi = None
    for enc in isolate_positive_roots(px):
        if enc.high >= x0:
            pi = enc.refine(precision)
            break
    if pi is None:
        raise ConditionViolated("no branch-point ordinate above the series estimate")

    u_iv = (rho.low, rho.high)
    x_iv = (pi.low, pi.high)
    if _iv_excludes_zero(interval_eval_bipoly(phi, u_iv, x_iv)):
        raise NoConsistentRoot("Phi does not vanish on the certified box")
    if _iv_excludes_zero(interval_eval_bipoly(phi_x, u_iv, x_iv)):
        raise ConditionViolated("Phi_X does not vanish on the certified box")
    phi_u_iv = interval_eval_bipoly(phi.derivative_u(), u_iv, x_iv)
    phi_xx_iv = interval_eval_bipoly(phi_x.derivative_x(), u_iv, x_iv)
    if not _iv_excludes_zero(phi_u_iv):
        raise ConditionViolated("Phi_u not certified away from zero at the branch point")
    if not _iv_excludes_zero(phi_xx_iv):
        raise ConditionViolated("Phi_XX not certified away from zero at the branch point")

    with mpmath.workprec(MP_PREC_BITS):
        phi_u = phi.derivative_u().eval(rho_hat, pi.midpoint)
        phi_xx = phi_x.derivative_x().eval(rho_hat, pi.midpoint)
        ratio = 2 * phi_u / phi_xx
        if ratio <= 0:
            raise ConditionViolated(f"2 Phi_u / Phi_XX = {ratio} is not positive")
        lam = -mpmath.sqrt(_to_mpf(ratio))
        c_val = (-lam) * mpmath.sqrt(_to_mpf(rho_hat)) / (2 * mpmath.sqrt(mpmath.pi))
        growth = 1 / _to_mpf(rho_hat)
        pi_val = _to_mpf(pi.midpoint)
    return AsymData(label, rho, pi, pi_val, lam, c_val, growth)


def _to_mpf(q):
    return mpmath.mpf(int(q.numerator)) / mpmath.mpf(int(q.denominator))


def dominant_singularity(
    gamma: int,
    precision=Q(1, 10**12),
    system: GammaSystem | None = None,
    h: TruncSeries | None = None,
    cache_dir: Path | None = None,
    use_cache: bool = True,
    max_gamma: int = 4,
) -> AsymData:
    """Certified dominant singularity and transfer constants of H_gamma.

    Supported up to ``max_gamma`` (resultants grow quickly beyond desk scale).
    """
    if not 1 <= gamma <= max_gamma:
        raise ValueError(f"gamma must lie in 1..{max_gamma}")
    if system is None:
        system = build_P(gamma, cache_dir=cache_dir)
    if h is None:
        h = H_series(gamma, 120, shadows=system.shadows)
    delta = _delta_poly(system, cache_dir, use_cache)
    return algebraic_singularity(system.P, h, precision, label=gamma, delta=delta)


# ---------------------------------------------------------------------------
# Structure growth rates (supercritical composition)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GrowthRate:
    """Growth constant 1/z with a certified error bound."""

    tau: int
    gamma: int
    with_one_arcs: bool
    value: object  # rational midpoint of the certified interval
    error: object  # half-width, rational
    z_low: object
    z_high: object

    def as_float(self) -> float:
        return float(self.value)


def _theta_fraction(tau: int, with_one_arcs: bool) -> tuple[Poly, Poly]:
    """theta_tau (or its 1-arc variant) as an exact fraction N(z)/D(z).

    With A = z^(2 tau - 2), B = z^(2 tau) - z^2 + 1:
        theta       = A z^2 B / (A z^2 + (1 - z) B)^2
        theta-tilde = A z^2 / (B (1 - z)^2)
    """
    a = Poly([0] * (2 * tau - 2) + [1])
    b_terms = {0: 1, 2 * tau: 1}
    b_terms[2] = b_terms.get(2, 0) - 1
    b = Poly([b_terms.get(k, 0) for k in range(2 * tau + 1)])
    az2 = a.shift(2)
    if with_one_arcs:
        num = az2
        den = b * Poly([1, -1]) * Poly([1, -1])
    else:
        core = az2 + Poly([1, -1]) * b
        num = az2 * b
        den = core * core
    return num, den


def structure_growth(
    tau: int,
    gamma: int,
    with_one_arcs: bool = False,
    precision=Q(1, 10**6),
    asym: AsymData | None = None,
    cache_dir: Path | None = None,
) -> GrowthRate:
    """Exponential growth rate of canonical structure counts.

    Finds the smallest positive z with theta_tau(z) = rho_gamma by sign scan
    plus bisection against the exact rho enclosure, certifies that theta has
    nonvanishing derivative there and no pole before it, and returns 1/z with
    an explicit error bound.
    """
    if tau < 1 or gamma < 1:
        raise ValueError("tau and gamma must be >= 1")
    precision = Q(precision)
    if asym is None:
        asym = dominant_singularity(gamma, cache_dir=cache_dir)
    rho = asym.rho
    num, den = _theta_fraction(tau, with_one_arcs)

    poles = [p.refine(Q(1, 1024)) for p in isolate_positive_roots(den)]
    scan_hi = ONE
    for pole in poles:
        if pole.low < scan_hi:
            scan_hi = pole.low * Q(15, 16)

    def compare(z) -> int:
        """-1/0/+1: theta(z) versus the rho enclosure (0 = inside, undecided)."""
        nonlocal rho
        nv = num(z)
        dv = den(z)
        if dv <= 0:
            raise NoRootBeforePole(f"denominator not positive at z={z}")
        while True:
            if nv < rho.low * dv:
                return -1
            if nv > rho.high * dv:
                return 1
            if rho.width < Q(1, 10**60):
                return 0
            rho = rho.refine(rho.width / 16)

    steps = 256
    z_lo = None
    z_hi = None
    prev = ZERO
    for k in range(1, steps + 1):
        z = scan_hi * Q(k, steps)
        if compare(z) >= 0:
            z_lo, z_hi = prev, z
            break
        prev = z
    if z_lo is None:
        raise NoRootBeforePole("theta never reaches rho before its pole")

    target = precision * z_lo * z_lo / 2 if z_lo > 0 else precision / 1000
    while z_hi - z_lo > target:
        mid = (z_lo + z_hi) / 2
        if compare(mid) < 0:
            z_lo = mid
        else:
            z_hi = mid

    # derivative of theta: sign of N'D - ND' on the bracket, rigorously
    deriv_num = num.derivative() * den - num * den.derivative()
    iv = interval_eval_poly(deriv_num, (z_lo, z_hi))
    if not _iv_excludes_zero(iv):
        raise ConditionViolated("theta' not certified nonzero at the crossing")
    for pole in poles:
        if pole.low <= z_hi:
            raise NoRootBeforePole("a pole of theta precedes the crossing")

    lo_growth = ONE / z_hi
    hi_growth = ONE / z_lo
    value = (lo_growth + hi_growth) / 2
    return GrowthRate(tau, gamma, with_one_arcs, value, (hi_growth - lo_growth) / 2, z_lo, z_hi)


# ---------------------------------------------------------------------------
# Coefficient-level checks of the transfer asymptotics
# ---------------------------------------------------------------------------


def asym_ratio(gamma: int, n: int, data: AsymData, h: TruncSeries) -> float:
    """h_gamma(n) divided by its predicted asymptote c n^(-3/2) rho^(-n)."""
    if n > h.order:
        raise ValueError("series too short for the requested index")
    return series_asym_ratio(h, n, data)


def series_asym_ratio(series: TruncSeries, n: int, data: AsymData) -> float:
    digits = int(n * mpmath.log10(1 / data.growth) * -1) + 40
    with mpmath.workdps(max(digits, 50)):
        rho = _to_mpf(data.rho.midpoint)
        coeff = _to_mpf(series.coeffs[n])
        predicted = data.c_val * mpmath.power(n, mpmath.mpf(-1.5)) * mpmath.power(rho, -n)
        return float(coeff / predicted)

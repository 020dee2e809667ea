"""Exact rational numbers: the coefficient carrier for every series in the package.

``Rational`` is ``gmpy2.mpq`` when available (C-backed, roughly an order of
magnitude faster on the dense series arithmetic done here) and
``fractions.Fraction`` otherwise.  Both are arbitrary precision, always reduced
to lowest terms, and keep a positive denominator, so the two backends are
interchangeable; everything in this module works with either.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as Rational

    BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - exercised only without gmpy2
    Rational = Fraction
    BACKEND = "fractions"

Q = Rational

ZERO = Q(0)
ONE = Q(1)


def is_integral(q) -> bool:
    """True iff q has denominator 1."""
    return q.denominator == 1


def as_integer(q) -> int:
    """Convert an integral rational to int; raise if it has a denominator."""
    if q.denominator != 1:
        raise ValueError(f"{q} is not an integer")
    return int(q.numerator)


def to_string(q) -> str:
    """Decimal string: plain integer, or "num/den" when a denominator remains."""
    return str(q)


def from_string(s: str):
    """Parse "num" or "num/den" back into a Rational."""
    s = s.strip()
    if "/" in s:
        num, den = s.split("/")
        return Q(int(num), int(den))
    return Q(int(s))


def from_float(x: float, max_denominator: int = 10**12):
    """Rational approximation of a float, for seeding exact searches.

    Floating point is only ever a heuristic input here; certified work always
    happens on the resulting Rational.
    """
    return Q(Fraction(x).limit_denominator(max_denominator))

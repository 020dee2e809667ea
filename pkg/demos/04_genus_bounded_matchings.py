"""Genus-bounded matchings: the series H(u) and its defining polynomial.

H counts matchings whose every irreducible crossing component stays within a
genus budget gamma.  It solves
    H - u H^2 - sum_g I_g( uH^2 / (1 - uH^2) ) = 1,
and clearing denominators yields a polynomial P(u, X) with P(u, H(u)) = 0.
Run: python demos/04_genus_bounded_matchings.py
"""

from gammaenum import oracle
from gammaenum.exact import TruncSeries, bipoly_eval_series
from gammaenum.gamma import H_series, build_P
from gammaenum.hz import double_factorial
from gammaenum.shadows import shadow_set

shadows = shadow_set(2, use_cache=False)

h1 = H_series(1, 10, shadows=shadows)
h2 = H_series(2, 10, shadows=shadows)
print("m:              ", list(range(11)))
print("gamma=1 counts: ", [int(c) for c in h1.coeffs])
print("gamma=2 counts: ", [int(c) for c in h2.coeffs])
print("all matchings:  ", [double_factorial(m) for m in range(11)])

# With <= 2(gamma+1) - 1 arcs no component can exceed the budget, so the
# first few counts coincide with (2m-1)!!; the first defect counts the
# smallest over-budget shadows.
print("first gamma=1 defect:", double_factorial(4) - int(h1.coeffs[4]),
      "(the 17 genus-2 shadows with 4 arcs)")
print("first gamma=2 defect:", double_factorial(6) - int(h2.coeffs[6]),
      "(the 1259 genus-3 shadows with 6 arcs)")

# Enumeration agrees.
assert all(int(h1.coeffs[m]) == oracle.count_gamma_matchings(1, m) for m in range(9))
assert all(int(h2.coeffs[m]) == oracle.count_gamma_matchings(2, m) for m in range(9))
print("enumeration agrees for m <= 8")

# The defining polynomial annihilates the series to any order.
system = build_P(1, shadows)
print("deg_X P (gamma=1):", system.P.degree_x)
u = TruncSeries(10, [0, 1])
print("P(u, H(u)) == 0:", bipoly_eval_series(system.P, u, h1) == TruncSeries.zero(10))

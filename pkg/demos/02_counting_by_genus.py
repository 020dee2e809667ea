"""Matchings of [2m] bucketed by genus: integer recursion vs exhaustive count.

The counts c_g(m) satisfy
    (m+1) c_g(m) = 2(2m-1) c_g(m-1) + (2m-1)(m-1)(2m-3) c_{g-1}(m-2),
and each genus-g series collapses to an integer polynomial Q_g against the
square-root kernel:  C_g(z) = Q_g(z) sqrt(1-4z) / (1-4z)^{3g}.
Run: python demos/02_counting_by_genus.py
"""

from gammaenum import oracle
from gammaenum.exact import series_binomial_power
from gammaenum.hz import C_series, Q_poly, double_factorial, hz_table
from gammaenum.rational import Q

table = hz_table(4, 8)
print("c_g(m) for m <= 8:")
print("m:      " + "".join(f"{m:>10d}" for m in range(9)))
for g in range(5):
    print(f"g={g}:   " + "".join(f"{table.count(g, m):>10d}" for m in range(9)))
print("row sums are the double factorials (2m-1)!!:",
      all(table.row_sum(m) == double_factorial(m) for m in range(9)))

# The recursion is exact; the brute-force enumerator agrees bucket by bucket.
for m in (4, 6):
    counts = oracle.count_matchings_by_genus(m)
    assert all(counts.get(g) == table.count(g, m) for g in range(4))
print("enumeration agrees with the recursion at m = 4 and m = 6")

# Q_g packages a whole genus row into a handful of integers.
for g in (1, 2, 3):
    print(f"Q_{g}(z) =", Q_poly(g))

# Rebuild the genus-2 series from Q_2 alone.
order = 14
rebuilt = Q_poly(2).to_series(order) * series_binomial_power(-4, Q(-11, 2), order)
assert rebuilt == C_series(2, order)
print("C_2 rebuilt from Q_2 exactly, first terms:",
      [int(c) for c in rebuilt.coeffs[:9]])

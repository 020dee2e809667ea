"""Canonical structures on a backbone, shapes, and arc-marked refinements.

Structures live on n backbone vertices, ban 1-arcs, keep every stack at least
tau deep, and bound each component's genus by gamma.  All their counting
series are substitutions into the genus-bounded matching series H.
Run: python demos/05_structures_and_shapes.py
"""

from gammaenum import oracle
from gammaenum.gamma import (
    A_series,
    G_lambda_series,
    G_series,
    Gtilde_series,
    H_series,
    S_series,
)
from gammaenum.shadows import shadow_set

shadows = shadow_set(2, use_cache=False)
n = 12

print("structure counts by backbone length (n = 0..12):")
for gamma in (1, 2):
    h = H_series(gamma, n, shadows=shadows)
    for tau in (1, 2):
        series = G_series(tau, gamma, n, h=h)
        counts = [int(c) for c in series.coeffs]
        assert counts == [oracle.count_structures(tau, gamma, k, False) for k in range(n + 1)]
        print(f"  tau={tau} gamma={gamma}: {counts}")

h1 = H_series(1, n, shadows=shadows)
gt = Gtilde_series(1, 1, n, h=h1)
print("with 1-arcs allowed (tau=1, gamma=1):", [int(c) for c in gt.coeffs])

# Shapes: stack-free matchings, marked by their 1-arcs.
s = S_series(1, 5, h=h1.truncate(5))
print("shapes with n arcs and k 1-arcs (gamma=1):")
for arcs in range(6):
    row = {k: int(s.level(k).coeffs[arcs]) for k in range(arcs + 1) if s.level(k).coeffs[arcs]}
    print(f"  {arcs} arcs: {row}")

# Arc-marked structures: a bivariate refinement that sums back to G.
a = A_series(1, 1, 8, 4, h=h1.truncate(8))
print("structures on 8 vertices by arc count:",
      [int(a.level(m).coeffs[8]) for m in range(5)])
assert a.specialize_t(1) == G_series(1, 1, 8, h=h1.truncate(8))

# One fixed shape inflates independently of everything but its arc counts;
# summing over all shapes recovers the full structure series.
total = None
from gammaenum.exact import TruncSeries

total = TruncSeries(10, [1] * 11)  # the empty shape: bare backbones
for arcs in range(1, 6):
    for (a_key, one), count in oracle.count_shapes(1, arcs).counts.items():
        total = total + G_lambda_series(a_key, one, 1, 10).scale(count)
assert total == G_series(1, 1, 10, h=h1.truncate(10))
print("shape-sum identity verified to order 10")

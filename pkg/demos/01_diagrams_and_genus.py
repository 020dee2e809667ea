"""Diagrams, genus, shadows, and structure classification.

A diagram is a partial matching of points 1..n on a line, arcs drawn above.
Its genus comes from the boundary walk of the thickened picture; its shadow
keeps only the crossing skeleton.  Run: python demos/01_diagrams_and_genus.py
"""

from gammaenum.diagrams import (
    Diagram,
    Matching,
    classify,
    format_diagram,
    genus,
    irreducible_components,
    is_irreducible,
    is_shadow,
    shadow,
)

# The two 2-arc matchings with different topology: nested arcs bound a disc,
# crossing arcs need a torus.
nested = Matching.from_arcs([(1, 4), (2, 3)])
crossing = Matching.from_arcs([(1, 3), (2, 4)])
print("genus of nested pair   :", genus(nested))
print("genus of crossing pair :", genus(crossing))

# A stack of three parallel arcs is noncrossing: its shadow is empty.
stack = Matching.from_arcs([(1, 6), (2, 5), (3, 4)])
print("shadow of a 3-stack    :", shadow(stack).sorted_arcs(), "(empty)")

# Mixing crossings with decoration: the shadow strips the noncrossing arc
# and collapses the doubled crossing back to the bare 2-crossing.
decorated = Diagram(12, [(1, 7), (2, 6), (3, 11), (4, 5), (8, 12)])
print("decorated diagram      :", format_diagram(decorated).strip().replace("\n", " | "))
print("its shadow             :", shadow(decorated).sorted_arcs())
print("component genera       :", irreducible_components(decorated).genera)

# Exactly four genus-one shadows exist; find them by exhaustive search.
from gammaenum.oracle import perfect_matchings

found = []
for size in (2, 3, 4):
    for m in perfect_matchings(size):
        if is_shadow(m) and is_irreducible(m) and genus(m) == 1:
            found.append(m.sorted_arcs())
print("the four genus-one shadows:")
for arcs in found:
    print("   ", arcs)
assert len(found) == 4

# Classification: genus bound gamma, minimum stack size tau, 1-arc policy.
candidate = Diagram(9, [(1, 9), (2, 8), (4, 6)])
for tau in (1, 2, 3):
    verdict = classify(candidate, gamma=1, tau=tau, allow_one_arcs=False)
    print(f"stacks >= {tau}: structure? {verdict}")

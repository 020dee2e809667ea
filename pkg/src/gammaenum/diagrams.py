"""Arc diagrams on a backbone: genus, shadows, irreducible components, classification.

A diagram places vertices 1..n on a line and draws arcs (i, j), i < j, in the
upper half-plane, each vertex lying on at most one arc.  Key notions:

* two arcs (i, j) and (k, l) *cross* iff i < k < j < l;
* a *stack* is a maximal run of parallel arcs (i, j), (i+1, j-1), ...;
* a *1-arc* joins backbone neighbours (i, i+1);
* the *shadow* deletes every noncrossing arc, drops isolated vertices, and
  collapses stacks to single arcs;
* the *genus* of a matching is read off the boundary components of the
  associated ribbon surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Arc = tuple[int, int]


@dataclass(frozen=True)
class Diagram:
    """Partial matching on vertices 1..n; arcs are endpoint-disjoint pairs."""

    n: int
    arcs: frozenset

    def __init__(self, n: int, arcs: Iterable[Arc] = ()):
        arcset = frozenset((int(i), int(j)) for i, j in arcs)
        seen: set[int] = set()
        for i, j in arcset:
            if not 1 <= i < j <= n:
                raise ValueError(f"arc ({i},{j}) out of range for n={n}")
            if i in seen or j in seen:
                raise ValueError(f"vertex reused by arc ({i},{j})")
            seen.add(i)
            seen.add(j)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", arcset)

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def partner(self) -> dict[int, int]:
        p = {}
        for i, j in self.arcs:
            p[i] = j
            p[j] = i
        return p

    def has_one_arc(self) -> bool:
        return any(j == i + 1 for i, j in self.arcs)

    def is_perfect(self) -> bool:
        return 2 * len(self.arcs) == self.n


class Matching(Diagram):
    """Diagram with every vertex covered (perfect chord diagram on [2m])."""

    def __init__(self, n: int, arcs: Iterable[Arc] = ()):
        super().__init__(n, arcs)
        if 2 * len(self.arcs) != n:
            raise ValueError("matching must cover every vertex")

    @classmethod
    def from_arcs(cls, arcs: Iterable[Arc]) -> "Matching":
        arcs = list(arcs)
        return cls(2 * len(arcs), arcs)


@dataclass(frozen=True)
class ShadowDecomposition:
    """Irreducible pieces of a diagram's shadow, each relabeled and with its genus."""

    components: tuple
    genera: tuple

    @property
    def max_genus(self) -> int:
        return max(self.genera, default=0)

    @property
    def total_genus(self) -> int:
        return sum(self.genera)


def crosses(a: Arc, b: Arc) -> bool:
    i, j = a
    k, l = b
    return i < k < j < l or k < i < l < j


def _relabel(arcs: Iterable[Arc]) -> Matching:
    """Relabel the arc endpoints to 1..2k preserving order."""
    arcs = list(arcs)
    points = sorted(p for arc in arcs for p in arc)
    rank = {p: r + 1 for r, p in enumerate(points)}
    return Matching(len(points), [(rank[i], rank[j]) for i, j in arcs])


def genus(m: Matching) -> int:
    """Genus of a matching via boundary components of its ribbon surface.

    With a arcs on 2a points, walk the permutation alpha o rho where rho is the
    cyclic shift i -> i+1 (2a -> 1) and alpha the arc involution; if it has r
    cycles, the genus is (a + 1 - r) / 2.  The empty matching has genus 0.
    """
    a = m.num_arcs
    if a == 0:
        return 0
    p = m.partner()
    n = 2 * a
    seen = [False] * (n + 1)
    r = 0
    for start in range(1, n + 1):
        if not seen[start]:
            r += 1
            c = start
            while not seen[c]:
                seen[c] = True
                c = p[c % n + 1]
    g2 = a + 1 - r
    assert g2 >= 0 and g2 % 2 == 0, "boundary walk violated Euler parity"
    return g2 // 2


def _crossing_arcs(d: Diagram) -> list[Arc]:
    arcs = d.sorted_arcs()
    keep = []
    for a in arcs:
        if any(b != a and crosses(a, b) for b in arcs):
            keep.append(a)
    return keep


def _collapse_stacks(arcs: Sequence[Arc]) -> Matching:
    """Relabel to consecutive points and merge adjacent parallel pairs to a fixpoint."""
    current = _relabel(arcs)
    while True:
        arcset = current.arcs
        merged = None
        for i, j in arcset:
            if (i + 1, j - 1) in arcset:
                merged = (i, j)
                break
        if merged is None:
            return current
        i, j = merged
        current = _relabel(a for a in arcset if a != (i + 1, j - 1))


def shadow(d: Diagram) -> Matching:
    """Shadow of a diagram: crossing arcs only, relabeled, stacks collapsed.

    Removing noncrossing arcs is a one-shot operation (crossing is mutual, so
    deleting noncrossing arcs never changes the crossing status of the rest);
    stack collapse is iterated because merging a pair can create a new one.
    """
    return _collapse_stacks(_crossing_arcs(d))


def crossing_components(d: Diagram) -> list[list[Arc]]:
    """Connected components of the crossing graph (arcs as nodes)."""
    arcs = d.sorted_arcs()
    k = len(arcs)
    parent = list(range(k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(k):
        for b in range(a + 1, k):
            if crosses(arcs[a], arcs[b]):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
    buckets: dict[int, list[Arc]] = {}
    for idx, arc in enumerate(arcs):
        buckets.setdefault(find(idx), []).append(arc)
    return sorted(buckets.values())


def irreducible_components(d: Diagram) -> ShadowDecomposition:
    """Irreducible shadows of a diagram with their genera.

    Computed as the crossing-graph components of shadow(d), each relabeled to a
    standalone matching.
    """
    sh = shadow(d)
    comps = crossing_components(sh)
    matchings = tuple(_relabel(c) for c in comps)
    return ShadowDecomposition(matchings, tuple(genus(m) for m in matchings))


def is_shadow(m: Matching) -> bool:
    """True iff every arc crosses some other arc and no adjacent parallel pair exists."""
    arcs = m.sorted_arcs()
    arcset = m.arcs
    for a in arcs:
        if not any(b != a and crosses(a, b) for b in arcs):
            return False
    return not any((i + 1, j - 1) in arcset for i, j in arcs)


def is_irreducible(m: Matching) -> bool:
    """True iff the matching is nonempty and its crossing graph is connected."""
    if m.num_arcs == 0:
        return False
    return len(crossing_components(m)) == 1


def maximal_stacks(d: Diagram) -> list[list[Arc]]:
    """Maximal runs of parallel arcs (i, j), (i+1, j-1), ... in vertex labels."""
    arcset = d.arcs
    stacks = []
    for i, j in sorted(arcset):
        if (i - 1, j + 1) in arcset:
            continue  # not the outermost arc of its run
        run = []
        k = 0
        while (i + k, j - k) in arcset:
            run.append((i + k, j - k))
            k += 1
        stacks.append(run)
    return stacks


def min_stack_size(d: Diagram) -> int:
    """Arc count of the smallest maximal stack; n+1 when the diagram has no arcs."""
    stacks = maximal_stacks(d)
    if not stacks:
        return d.n + 1
    return min(len(s) for s in stacks)


def classify(d: Diagram, gamma: int, tau: int, allow_one_arcs: bool) -> bool:
    """Membership test for canonical structures.

    True iff every irreducible shadow component has genus <= gamma, every
    maximal stack carries at least tau arcs, and (when 1-arcs are banned) no
    arc joins backbone neighbours.  The empty diagram qualifies always.
    """
    if gamma < 1 or tau < 1:
        raise ValueError("gamma and tau must be >= 1")
    if not allow_one_arcs and d.has_one_arc():
        return False
    if any(len(s) < tau for s in maximal_stacks(d)):
        return False
    return irreducible_components(d).max_genus <= gamma


def iterative_decomposition(d: Diagram) -> ShadowDecomposition:
    """Bottom-up removal of irreducible shadows; second route to the decomposition.

    Removes noncrossing arcs and isolated vertices, collapses stacks, then peels
    innermost irreducible components one at a time (collapsing any stack formed
    by a removal).  Exists to cross-check irreducible_components on random
    diagrams; the two must agree.
    """
    current = shadow(d)
    removed: list[Matching] = []
    while current.num_arcs:
        comps = crossing_components(current)
        spans = [(min(a[0] for a in c), max(a[1] for a in c)) for c in comps]
        inner = None
        for idx, (lo, hi) in enumerate(spans):
            nested = any(
                i != idx and lo < spans[i][0] and spans[i][1] < hi for i in range(len(comps))
            )
            if not nested:
                inner = idx
                break
        assert inner is not None
        removed.append(_relabel(comps[inner]))
        rest = [a for idx, c in enumerate(comps) if idx != inner for a in c]
        current = _collapse_stacks(rest) if rest else Matching(0, [])
    removed.sort(key=lambda m: m.sorted_arcs())
    return ShadowDecomposition(tuple(removed), tuple(genus(m) for m in removed))


# ---------------------------------------------------------------------------
# Text format: first line n, second line whitespace-separated arcs "i-j"
# ---------------------------------------------------------------------------


def parse_diagram(text: str) -> Diagram:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty diagram text")
    n = int(lines[0])
    arcs = []
    if len(lines) > 1:
        for token in lines[1].split():
            i, j = token.split("-")
            arcs.append((int(i), int(j)))
    return Diagram(n, arcs)


def format_diagram(d: Diagram) -> str:
    arcline = " ".join(f"{i}-{j}" for i, j in d.sorted_arcs())
    return f"{d.n}\n{arcline}\n"

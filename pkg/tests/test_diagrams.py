"""Genus, shadows, components, and classification on hand-checked diagrams."""

import random

import pytest

from gammaenum.diagrams import (
    Diagram,
    Matching,
    classify,
    crosses,
    format_diagram,
    genus,
    irreducible_components,
    is_irreducible,
    is_shadow,
    iterative_decomposition,
    maximal_stacks,
    min_stack_size,
    parse_diagram,
    shadow,
)


def matching(*arcs):
    return Matching.from_arcs(arcs)


def test_genus_single_arc():
    assert genus(matching((1, 2))) == 0


def test_genus_crossing_pair():
    assert genus(matching((1, 3), (2, 4))) == 1


def test_genus_nested_pair():
    # boundary walk has cycles (1 3)(2)(4): r=3, g=(2+1-3)/2=0
    assert genus(matching((1, 4), (2, 3))) == 0


def test_genus_empty():
    assert genus(Matching(0, [])) == 0


def test_genus_three_crossing():
    assert genus(matching((1, 4), (2, 5), (3, 6))) == 1


def test_shadow_pure_stack_vanishes():
    sh = shadow(matching((1, 6), (2, 5), (3, 4)))
    assert sh.num_arcs == 0


def test_shadow_fixed_point():
    m = matching((1, 3), (2, 4))
    assert shadow(m) == m


def test_shadow_idempotent_on_random_diagrams():
    rng = random.Random(7)
    for _ in range(200):
        d = _random_diagram(rng, 12)
        sh = shadow(d)
        assert shadow(sh) == sh


def test_genus_invariant_under_shadow_projection():
    # genus of crossing arcs only: compare genus(shadow(d)) with the genus of
    # the crossing-arc submatching (stack collapse must not change it)
    rng = random.Random(11)
    for _ in range(300):
        m = _random_matching(rng, 5)
        from gammaenum.diagrams import _crossing_arcs, _relabel

        crossing_part = _relabel(_crossing_arcs(m))
        assert genus(shadow(m)) == genus(crossing_part)


def test_components_empty():
    dec = irreducible_components(Diagram(3, []))
    assert dec.components == () and dec.genera == ()


def test_components_single_crossing():
    dec = irreducible_components(matching((1, 3), (2, 4)))
    assert dec.genera == (1,)


def test_components_two_disjoint_crossings():
    dec = irreducible_components(matching((1, 3), (2, 4), (5, 7), (6, 8)))
    assert sorted(dec.genera) == [1, 1]
    assert genus(matching((1, 3), (2, 4), (5, 7), (6, 8))) == 2  # additivity


def test_classify_single_long_arc():
    assert classify(Diagram(3, [(1, 3)]), gamma=1, tau=1, allow_one_arcs=False)


def test_classify_rejects_one_arc():
    assert not classify(Diagram(2, [(1, 2)]), gamma=1, tau=1, allow_one_arcs=False)
    assert classify(Diagram(2, [(1, 2)]), gamma=1, tau=1, allow_one_arcs=True)


def test_classify_genus_bound():
    assert classify(matching((1, 3), (2, 4)), gamma=1, tau=1, allow_one_arcs=False)
    g2 = matching((1, 5), (2, 6), (3, 7), (4, 8))  # full 4-arc crossing
    assert genus(g2) == 2 and is_irreducible(g2)
    assert not classify(g2, gamma=1, tau=1, allow_one_arcs=False)
    assert classify(g2, gamma=2, tau=1, allow_one_arcs=False)


def test_classify_stack_depth():
    stack2 = Diagram(6, [(1, 5), (2, 4)])
    assert classify(stack2, gamma=1, tau=2, allow_one_arcs=False)
    assert not classify(Diagram(6, [(1, 5)]), gamma=1, tau=2, allow_one_arcs=False)


def test_is_shadow_examples():
    assert is_shadow(matching((1, 3), (2, 4)))
    assert is_irreducible(matching((1, 3), (2, 4)))
    assert not is_shadow(matching((1, 4), (2, 3)))
    assert is_shadow(matching((1, 4), (2, 5), (3, 6)))
    assert is_irreducible(matching((1, 4), (2, 5), (3, 6)))
    assert not is_irreducible(Matching(0, []))


def test_four_genus_one_shadows():
    # exactly four irreducible shadows of genus one across all sizes 2..4
    found = []
    for m in range(2, 5):
        for match in _all_matchings(m):
            if is_shadow(match) and is_irreducible(match) and genus(match) == 1:
                found.append(match)
    assert len(found) == 4


def test_stacks():
    d = Diagram(10, [(1, 10), (2, 9), (4, 7), (5, 6)])
    runs = maximal_stacks(d)
    assert sorted(len(r) for r in runs) == [2, 2]
    assert min_stack_size(Diagram(4, [])) == 5


def test_boundary_parity_invariant():
    rng = random.Random(3)
    for _ in range(200):
        m = _random_matching(rng, 6)
        a = m.num_arcs
        g = genus(m)
        r = a + 1 - 2 * g
        assert r >= 1 and (r - (a + 1)) % 2 == 0


def test_stack_collapse_preserves_genus():
    rng = random.Random(5)
    checked = 0
    for _ in range(400):
        m = _random_matching(rng, 6)
        arcset = m.arcs
        for i, j in m.sorted_arcs():
            if (i + 1, j - 1) in arcset:
                from gammaenum.diagrams import _relabel

                collapsed = _relabel(a for a in arcset if a != (i + 1, j - 1))
                assert genus(collapsed) == genus(m)
                checked += 1
                break
    assert checked > 50


def test_iterative_decomposition_matches_one_shot():
    rng = random.Random(13)
    for _ in range(300):
        d = _random_diagram(rng, 14)
        one_shot = irreducible_components(d)
        iterative = iterative_decomposition(d)
        key = lambda ms: sorted(tuple(m.sorted_arcs()) for m in ms)
        assert key(one_shot.components) == key(iterative.components)
        assert sorted(one_shot.genera) == sorted(iterative.genera)


def test_component_genera_sum_to_shadow_genus():
    rng = random.Random(17)
    for _ in range(300):
        d = _random_diagram(rng, 12)
        dec = irreducible_components(d)
        assert dec.total_genus == genus(shadow(d))


def test_parse_and_format_roundtrip():
    d = Diagram(6, [(1, 4), (2, 6)])
    assert parse_diagram(format_diagram(d)) == d
    assert parse_diagram("3\n1-3\n") == Diagram(3, [(1, 3)])
    with pytest.raises(ValueError):
        Diagram(4, [(1, 3), (3, 4)])
    with pytest.raises(ValueError):
        Matching(4, [(1, 3)])


def test_crosses_is_symmetric():
    assert crosses((1, 3), (2, 4)) and crosses((2, 4), (1, 3))
    assert not crosses((1, 4), (2, 3))


# --- helpers ------------------------------------------------------------------


def _all_matchings(m):
    def rec(free):
        if not free:
            yield []
            return
        i = free[0]
        for idx in range(1, len(free)):
            j = free[idx]
            rest = free[1:idx] + free[idx + 1 :]
            for tail in rec(rest):
                yield [(i, j)] + tail

    for arcs in rec(list(range(1, 2 * m + 1))):
        yield Matching(2 * m, arcs)


def _random_matching(rng, m):
    free = list(range(1, 2 * m + 1))
    arcs = []
    while free:
        i = free.pop(0)
        j = free.pop(rng.randrange(len(free)))
        arcs.append((i, j))
    return Matching(2 * m, arcs)


def _random_diagram(rng, n):
    free = list(range(1, n + 1))
    rng.shuffle(free)
    arcs = []
    while len(free) >= 2 and rng.random() < 0.8:
        i = free.pop()
        j = free.pop()
        arcs.append((min(i, j), max(i, j)))
    return Diagram(n, arcs)

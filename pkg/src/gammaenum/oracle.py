"""Brute-force enumeration oracles: exact reference counts for every symbolic result.

One exhaustive pass per size computes a structural profile of each diagram
(genus, component genera, stacks, 1-arcs); every public count is a sum over
profile buckets.  A compiled kernel does the heavy sizes when numba is
importable; a pure-Python reference path built directly on
``gammaenum.diagrams`` computes the same profiles and is compared against the
kernels in the tests.  Enumeration order is canonical (smallest uncovered
vertex pairs first), so results are deterministic.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import IO, Iterator

from .diagrams import Diagram, Matching, crossing_components, genus, min_stack_size
from .errors import CapExceeded
from .hz import double_factorial

try:
    from . import _kernels

    HAVE_KERNELS = True
except ImportError:  # pragma: no cover - numba always present in CI
    _kernels = None
    HAVE_KERNELS = False


@dataclass(frozen=True)
class OracleCaps:
    """Enumeration size limits; exceeding one raises CapExceeded, never truncates."""

    matchings: int = 9
    shadows: int = 8
    gamma_matchings: int = 9
    shapes: int = 7
    structures: int = 12

    def require(self, kind: str, value: int) -> None:
        cap = getattr(self, kind)
        if value > cap:
            raise CapExceeded(f"{kind} enumeration at size {value} exceeds cap {cap}")
        if value < 0:
            raise ValueError("enumeration size must be nonnegative")


DEFAULT_CAPS = OracleCaps()


@dataclass(frozen=True)
class CountTable:
    """Exact counts from a complete, duplicate-free enumeration.

    Absent keys mean count zero.  ``counts`` maps integer key tuples to
    arbitrary-precision integers.
    """

    kind: str
    parameters: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)

    def get(self, *key: int) -> int:
        return self.counts.get(tuple(key), 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def write_csv(self, fh: IO[str], key_names: tuple[str, ...]) -> None:
        writer = csv.writer(fh)
        writer.writerow(list(key_names) + ["count"])
        for key in sorted(self.counts):
            writer.writerow(list(key) + [self.counts[key]])


# ---------------------------------------------------------------------------
# Reference enumeration (pure Python, definition-level)
# ---------------------------------------------------------------------------


def perfect_matchings(m: int) -> Iterator[Matching]:
    """All perfect matchings of [2m], smallest uncovered vertex paired first."""

    def rec(free: list[int]):
        if not free:
            yield []
            return
        i = free[0]
        for idx in range(1, len(free)):
            rest = free[1:idx] + free[idx + 1 :]
            for tail in rec(rest):
                yield [(i, free[idx])] + tail

    for arcs in rec(list(range(1, 2 * m + 1))):
        yield Matching(2 * m, arcs)


def partial_matchings(n: int) -> Iterator[Diagram]:
    """All partial matchings of [n] (involutions), in canonical order."""

    def rec(free: list[int]):
        if not free:
            yield []
            return
        i = free[0]
        for tail in rec(free[1:]):
            yield tail  # i unpaired
        for idx in range(1, len(free)):
            rest = free[1:idx] + free[idx + 1 :]
            for tail in rec(rest):
                yield [(i, free[idx])] + tail

    for arcs in rec(list(range(1, n + 1))):
        yield Diagram(n, arcs)


def _diagram_stats(d: Diagram) -> tuple[int, int, int, int, int]:
    """(max component genus, single component, has noncrossing arc, stack free, one arcs)."""
    comps = crossing_components(d)
    maxg = 0
    has_noncross = 0
    for comp in comps:
        if len(comp) == 1:
            has_noncross = 1
            continue
        sub = Matching(0, []) if not comp else _relabel_arcs(comp)
        g = genus(sub)
        if g > maxg:
            maxg = g
    from .diagrams import maximal_stacks

    stack_free = 1 if all(len(s) == 1 for s in maximal_stacks(d)) else 0
    one_arcs = sum(1 for i, j in d.arcs if j == i + 1)
    single = 1 if len(comps) == 1 else 0
    return maxg, single, has_noncross, stack_free, one_arcs


def _relabel_arcs(arcs) -> Matching:
    from .diagrams import _relabel

    return _relabel(arcs)


def reference_matching_profile(m: int) -> dict:
    """Same profile keys as the compiled kernel, from the definition-level code."""
    profile: dict[tuple, int] = {}
    if m == 0:
        return {(0, 0, 0, 0, 1, 0): 1}
    for match in perfect_matchings(m):
        g = genus(match)
        maxg, single, noncross, sfree, one = _diagram_stats(match)
        key = (g, maxg, single, noncross, sfree, one)
        profile[key] = profile.get(key, 0) + 1
    return profile


def reference_involution_profile(n: int) -> dict:
    cap = n // 2 + 1
    profile: dict[tuple, int] = {}
    for d in partial_matchings(n):
        maxg, _, _, _, one = _diagram_stats(d)
        mr = min(min_stack_size(d), cap) if d.arcs else cap
        key = (maxg, mr, 1 if one > 0 else 0)
        profile[key] = profile.get(key, 0) + 1
    return profile


# ---------------------------------------------------------------------------
# Profile dispatch
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def matching_profile(m: int) -> dict:
    if HAVE_KERNELS:
        return _kernels.matching_profile(m)
    return reference_matching_profile(m)


@lru_cache(maxsize=None)
def involution_profile(n: int) -> dict:
    if HAVE_KERNELS:
        return _kernels.involution_profile(n)
    return reference_involution_profile(n)


# ---------------------------------------------------------------------------
# Public counts
# ---------------------------------------------------------------------------


def count_matchings_by_genus(m: int, caps: OracleCaps = DEFAULT_CAPS) -> CountTable:
    """Bucket all (2m-1)!! perfect matchings of [2m] by genus."""
    caps.require("matchings", m)
    counts: dict[tuple, int] = {}
    for key, c in matching_profile(m).items():
        g = key[0]
        counts[(g,)] = counts.get((g,), 0) + c
    table = CountTable("matchings_by_genus", {"m": m}, counts)
    assert table.total() == double_factorial(m), "enumeration lost matchings"
    return table


def count_irreducible_shadows(m: int, caps: OracleCaps = DEFAULT_CAPS) -> CountTable:
    """Matchings of [2m] that are irreducible shadows, bucketed by genus."""
    caps.require("shadows", m)
    counts: dict[tuple, int] = {}
    for key, c in matching_profile(m).items():
        g, _maxg, single, noncross, sfree, _one = key
        if single and not noncross and sfree and m > 0:
            counts[(g,)] = counts.get((g,), 0) + c
    return CountTable("irreducible_shadows_by_genus", {"m": m}, counts)


def count_gamma_matchings(gamma: int, m: int, caps: OracleCaps = DEFAULT_CAPS) -> int:
    """Matchings of [2m] whose every irreducible component has genus <= gamma."""
    caps.require("gamma_matchings", m)
    return sum(c for key, c in matching_profile(m).items() if key[1] <= gamma)


def count_shapes(gamma: int, m: int, caps: OracleCaps = DEFAULT_CAPS) -> CountTable:
    """Stack-free gamma-matchings with m arcs, keyed by (arcs, one_arcs)."""
    caps.require("shapes", m)
    counts: dict[tuple, int] = {}
    for key, c in matching_profile(m).items():
        _g, maxg, _single, _noncross, sfree, one = key
        if sfree and maxg <= gamma:
            counts[(m, one)] = counts.get((m, one), 0) + c
    return CountTable("shapes_by_arcs_and_onearcs", {"gamma": gamma, "m": m}, counts)


def count_structures(
    tau: int, gamma: int, n: int, allow_one_arcs: bool, caps: OracleCaps = DEFAULT_CAPS
) -> int:
    """Partial matchings of [n] that classify as tau-canonical gamma-structures."""
    if tau < 1 or gamma < 1:
        raise ValueError("tau and gamma must be >= 1")
    caps.require("structures", n)
    cap = n // 2 + 1
    threshold = min(tau, cap)
    total = 0
    for (maxg, minrun, has_one), c in involution_profile(n).items():
        if maxg > gamma:
            continue
        if minrun < threshold:
            continue
        if not allow_one_arcs and has_one:
            continue
        total += c
    return total


def with_caps(**kwargs) -> OracleCaps:
    """Default caps with selected limits overridden."""
    return replace(DEFAULT_CAPS, **kwargs)

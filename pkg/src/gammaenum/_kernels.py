"""Compiled enumeration kernels behind the brute-force oracle.

Each kernel walks every perfect matching (or partial matching) of a small
vertex set once, computes a structural profile at the leaf, and accumulates a
dense count table.  The profiles recorded here are deliberately redundant so
one enumeration pass can answer every oracle query for that size:

* perfect matchings: (genus, max component genus, crossing graph connected,
  has noncrossing arc, stack-free, number of 1-arcs)
* partial matchings: (max component genus, smallest maximal-stack size, 1-arcs)

Results must agree entry for entry with the pure-Python reference path in
``oracle.py``; the tests enforce that.
"""

from __future__ import annotations

import numpy as np
from numba import njit

NO_STACKS = 1 << 30  # min-run marker for diagrams without arcs


@njit(cache=True)
def _full_genus(partner, n, seen):
    """Genus of a perfect matching from the cycles of arc-involution o shift."""
    for i in range(n):
        seen[i] = 0
    cycles = 0
    for s in range(n):
        if seen[s] == 0:
            cycles += 1
            c = s
            while seen[c] == 0:
                seen[c] = 1
                c = partner[(c + 1) % n]
    return (n // 2 + 1 - cycles) // 2


@njit(cache=True)
def _leaf_stats(partner, n, arc_a, arc_b, uf, pts, lp, seen):
    """Profile of one diagram given its partner array (partner[i]==i: unpaired).

    Returns (arcs, max component genus, single component, has noncrossing arc,
    stack free, min stack run, one-arc count).
    """
    k = 0
    one = 0
    for i in range(n):
        j = partner[i]
        if j > i:
            arc_a[k] = i
            arc_b[k] = j
            if j == i + 1:
                one += 1
            k += 1
    if k == 0:
        return 0, 0, 0, 0, 1, NO_STACKS, 0

    for x in range(k):
        uf[x] = x
    for x in range(k):
        ax = arc_a[x]
        bx = arc_b[x]
        for y in range(x + 1, k):
            ay = arc_a[y]
            by = arc_b[y]
            if (ax < ay < bx < by) or (ay < ax < by < bx):
                rx = x
                while uf[rx] != rx:
                    rx = uf[rx]
                ry = y
                while uf[ry] != ry:
                    ry = uf[ry]
                if rx != ry:
                    uf[rx] = ry

    ncomp = 0
    has_noncross = 0
    maxg = 0
    for root in range(k):
        rr = root
        while uf[rr] != rr:
            rr = uf[rr]
        if rr != root:
            continue
        ncomp += 1
        npts = 0
        csize = 0
        for x in range(k):
            r2 = x
            while uf[r2] != r2:
                r2 = uf[r2]
            if r2 == root:
                csize += 1
                pts[npts] = arc_a[x]
                npts += 1
                pts[npts] = arc_b[x]
                npts += 1
        if csize == 1:
            has_noncross = 1
            continue
        for ii in range(1, npts):
            v = pts[ii]
            jj = ii - 1
            while jj >= 0 and pts[jj] > v:
                pts[jj + 1] = pts[jj]
                jj -= 1
            pts[jj + 1] = v
        for r in range(npts):
            mate = partner[pts[r]]
            lo = 0
            hi = npts - 1
            while lo < hi:
                mid = (lo + hi) // 2
                if pts[mid] < mate:
                    lo = mid + 1
                else:
                    hi = mid
            lp[r] = lo
        for r in range(npts):
            seen[r] = 0
        cycles = 0
        for s in range(npts):
            if seen[s] == 0:
                cycles += 1
                c = s
                while seen[c] == 0:
                    seen[c] = 1
                    c = lp[(c + 1) % npts]
        g = (csize + 1 - cycles) // 2
        if g > maxg:
            maxg = g

    min_run = NO_STACKS
    max_run = 0
    for x in range(k):
        i = arc_a[x]
        j = arc_b[x]
        if i - 1 >= 0 and j + 1 < n and partner[i - 1] == j + 1:
            continue  # inner arc of a run; only outermost arcs start one
        run = 0
        while i + run < j - run and partner[i + run] == j - run:
            run += 1
        if run < min_run:
            min_run = run
        if run > max_run:
            max_run = run

    stack_free = 1 if max_run <= 1 else 0
    single = 1 if ncomp == 1 else 0
    return k, maxg, single, has_noncross, stack_free, min_run, one


@njit(cache=True)
def _rec_perfect(partner, n, out, arc_a, arc_b, uf, pts, lp, seen):
    i = -1
    for kk in range(n):
        if partner[kk] == -1:
            i = kk
            break
    if i == -1:
        g = _full_genus(partner, n, seen)
        _, maxg, single, noncross, sfree, _, one = _leaf_stats(
            partner, n, arc_a, arc_b, uf, pts, lp, seen
        )
        out[g, maxg, single, noncross, sfree, one] += 1
        return
    for j in range(i + 1, n):
        if partner[j] == -1:
            partner[i] = j
            partner[j] = i
            _rec_perfect(partner, n, out, arc_a, arc_b, uf, pts, lp, seen)
            partner[i] = -1
            partner[j] = -1


@njit(cache=True)
def _rec_partial(partner, n, cap, out, arc_a, arc_b, uf, pts, lp, seen):
    i = -1
    for kk in range(n):
        if partner[kk] == -1:
            i = kk
            break
    if i == -1:
        _, maxg, _, _, _, minrun, one = _leaf_stats(partner, n, arc_a, arc_b, uf, pts, lp, seen)
        mr = minrun if minrun < cap else cap
        out[maxg, mr, 1 if one > 0 else 0] += 1
        return
    partner[i] = i
    _rec_partial(partner, n, cap, out, arc_a, arc_b, uf, pts, lp, seen)
    partner[i] = -1
    for j in range(i + 1, n):
        if partner[j] == -1:
            partner[i] = j
            partner[j] = i
            _rec_partial(partner, n, cap, out, arc_a, arc_b, uf, pts, lp, seen)
            partner[i] = -1
            partner[j] = -1


def _buffers(max_arcs: int, n: int):
    return (
        np.empty(max(max_arcs, 1), np.int64),
        np.empty(max(max_arcs, 1), np.int64),
        np.empty(max(max_arcs, 1), np.int64),
        np.empty(max(n, 1), np.int64),
        np.empty(max(n, 1), np.int64),
        np.empty(max(n, 1) + 1, np.int64),
    )


def matching_profile(m: int) -> dict:
    """Profile counts over all perfect matchings of [2m].

    Keys: (genus, max_comp_genus, single_component, has_noncrossing,
    stack_free, one_arcs) with booleans as 0/1.
    """
    if m == 0:
        return {(0, 0, 0, 0, 1, 0): 1}
    n = 2 * m
    out = np.zeros((m + 1, m + 1, 2, 2, 2, m + 1), dtype=np.int64)
    partner = np.full(n, -1, np.int64)
    _rec_perfect(partner, n, out, *_buffers(m, n))
    profile = {}
    for idx in np.argwhere(out):
        profile[tuple(int(v) for v in idx)] = int(out[tuple(idx)])
    return profile


def involution_profile(n: int) -> dict:
    """Profile counts over all partial matchings of [n].

    Keys: (max_comp_genus, min_stack_run_capped, has_one_arc); the run cap
    n//2 + 1 marks diagrams without arcs.
    """
    cap = n // 2 + 1
    if n == 0:
        return {(0, cap, 0): 1}
    out = np.zeros((n // 2 + 1, cap + 1, 2), dtype=np.int64)
    partner = np.full(n, -1, np.int64)
    _rec_partial(partner, n, cap, out, *_buffers(n // 2, n))
    profile = {}
    for idx in np.argwhere(out):
        profile[tuple(int(v) for v in idx)] = int(out[tuple(idx)])
    return profile

"""Subset dynamic programming kernels for exact fill-in and width.

The DP runs over elimination prefixes encoded as bitmasks.  For a prefix S
and a vertex v not yet eliminated, reach(S, v) is the set of vertices outside
S reachable from v through S; its size is both v's elimination-time degree
and the number of filled-graph edges charged to v.  Minimizing the sum of
reach sizes (minus |E|) gives minimum fill-in; minimizing the max gives the
optimal elimination width.

The kernels are compiled with numba unless the MORALTRI_NO_NUMBA environment
variable is set, in which case the same code runs as plain Python over numpy
arrays (much slower, bit-identical results).
"""

from __future__ import annotations

import os

import numpy as np

INF = np.int64(1) << np.int64(60)

MODE_NONE = 0
MODE_FIRST = 1
MODE_LAST = 2

OBJ_SUM = 0
OBJ_MAX = 1

NUMBA_ENABLED = os.environ.get("MORALTRI_NO_NUMBA", "") not in ("1", "true", "yes")


def _reach_count(masks, n, prefix, v):
    """|reach(prefix, v)|: vertices outside prefix+v reachable via prefix."""
    grown = np.int64(1) << np.int64(v)
    reach = masks[v]
    while True:
        frontier = reach & prefix & ~grown
        if frontier == np.int64(0):
            break
        grown |= frontier
        for u in range(n):
            if (frontier >> np.int64(u)) & np.int64(1):
                reach |= masks[u]
    outside = reach & ~prefix & ~(np.int64(1) << np.int64(v))
    count = 0
    while outside:
        outside &= outside - np.int64(1)
        count += 1
    return count


def _subset_dp(masks, n, mode, w, objective):
    """DP over all prefixes; returns (dp, choice) arrays of size 2**n.

    dp[S] is the best objective over orderings whose prefix eliminates
    exactly S, choice[S] the last vertex of one best prefix (lowest vertex
    index wins ties).  mode pins w to the first or last position.
    """
    size = 1 << n
    full = np.int64(size - 1)
    dp = np.full(size, INF, dtype=np.int64)
    choice = np.full(size, -1, dtype=np.int8)
    dp[0] = 0
    for s in range(1, size):
        S = np.int64(s)
        if mode == MODE_FIRST and (S >> np.int64(w)) & np.int64(1) == np.int64(0):
            continue
        best = INF
        best_v = -1
        for v in range(n):
            bit = np.int64(1) << np.int64(v)
            if S & bit == np.int64(0):
                continue
            if mode == MODE_FIRST and S == bit and v != w:
                continue
            if mode == MODE_LAST and v == w and S != full:
                continue
            prev = S & ~bit
            base = dp[prev]
            if base >= INF:
                continue
            r = np.int64(_reach_count(masks, n, prev, v))
            if objective == OBJ_SUM:
                cand = base + r
            else:
                cand = base if base > r else r
            if cand < best:
                best = cand
                best_v = v
        dp[s] = best
        choice[s] = best_v
    return dp, choice


if NUMBA_ENABLED:
    from numba import njit

    _reach_count = njit(cache=True)(_reach_count)
    _subset_dp = njit(cache=True)(_subset_dp)


def subset_dp(masks, n, mode, w, objective):
    return _subset_dp(masks, np.int64(n), np.int64(mode), np.int64(w),
                      np.int64(objective))


def adjacency_masks(g):
    """Adjacency bitmasks of g in vertex insertion order (n <= 63)."""
    order = {v: i for i, v in enumerate(g.vertices)}
    masks = np.zeros(len(order), dtype=np.int64)
    for u, v in g.edges():
        masks[order[u]] |= np.int64(1) << np.int64(order[v])
        masks[order[v]] |= np.int64(1) << np.int64(order[u])
    return masks

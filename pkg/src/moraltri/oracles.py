"""Naive brute-force reference solvers.

These deliberately share nothing with the optimized solvers beyond the graph
primitives: orderings are enumerated lexicographically in vertex insertion
order and the first optimum wins, so witnesses are reproducible.
"""

from __future__ import annotations

import itertools

from .graphs import (
    ResourceLimitError,
    eliminate,
    is_simplicial,
    neighborhood_edges,
)

ORDERING_CAP = 9
FILL_CAP = 7
MORAL_CAP = 6


def _orderings(g, restriction):
    vs = list(g.vertices)
    if restriction is None:
        yield from itertools.permutations(vs)
        return
    kind, w = restriction
    g.index(w)
    rest = [v for v in vs if v != w]
    for perm in itertools.permutations(rest):
        if kind == "first":
            yield (w,) + perm
        elif kind == "last":
            yield perm + (w,)
        else:
            raise ValueError(f"unknown restriction kind {kind!r}")


def _check_cap(g, cap, what):
    if len(g) > cap:
        raise ResourceLimitError(
            f"{len(g)} vertices exceed the {what} cap of {cap}"
        )


def brute_min_ola(g, restriction=None):
    """Minimum linear arrangement cost and its first witness ordering."""
    _check_cap(g, ORDERING_CAP, "ordering enumeration")
    pos = {}
    best, witness = None, None
    for alpha in _orderings(g, restriction):
        for i, v in enumerate(alpha):
            pos[v] = i
        cost = sum(abs(pos[u] - pos[v]) for u, v in g.edges())
        if best is None or cost < best:
            best, witness = cost, alpha
    return best, witness


def brute_min_mcla(g, restriction=None):
    """Minimum linear cut value and its first witness ordering."""
    _check_cap(g, ORDERING_CAP, "ordering enumeration")
    n = len(g)
    best, witness = None, None
    for alpha in _orderings(g, restriction):
        pos = {v: i for i, v in enumerate(alpha)}
        value = 0
        for i in range(n - 1):
            cut = sum(
                1 for u, v in g.edges()
                if min(pos[u], pos[v]) <= i < max(pos[u], pos[v])
            )
            value = max(value, cut)
        if best is None or value < best:
            best, witness = value, alpha
    return best, witness


def eds_feasible(g, d_seq, restriction=None):
    """First ordering realizing the elimination degree sequence, or None."""
    _check_cap(g, ORDERING_CAP, "ordering enumeration")
    d_seq = tuple(d_seq)
    if len(d_seq) != len(g):
        raise ValueError("degree sequence length must equal |V|")
    for alpha in _orderings(g, restriction):
        pos = {v: i for i, v in enumerate(alpha)}
        if all(
            sum(1 for u in g.neighbors(v) if pos[u] > i) == d_seq[i]
            for i, v in enumerate(alpha)
        ):
            return alpha
    return None


def brute_min_fill_orderings(g):
    """Naive minimum fill-in over all |V|! orderings."""
    _check_cap(g, FILL_CAP, "fill enumeration")
    best = None
    for alpha in itertools.permutations(g.vertices):
        adj = {v: set(g.neighbors(v)) for v in g.vertices}
        fill = 0
        for v in alpha:
            nbrs = list(adj[v])
            for a, b in itertools.combinations(nbrs, 2):
                if b not in adj[a]:
                    adj[a].add(b)
                    adj[b].add(a)
                    fill += 1
            for u in nbrs:
                adj[u].discard(v)
            del adj[v]
            if best is not None and fill >= best:
                break
        else:
            if best is None or fill < best:
                best = fill
    return best


def brute_is_moral(g):
    """Exhaustive search for a perfect elimination kit.

    Tries every simplicial vertex and every excess subset at each level;
    failed subgraphs are remembered so dense inputs stay tractable.
    """
    _check_cap(g, MORAL_CAP, "kit enumeration")
    dead = set()

    def recurse(cur):
        if len(cur) == 0:
            return True
        key = cur.key()
        if key in dead:
            return False
        for x in cur.vertices:
            if not is_simplicial(cur, x):
                continue
            inner = sorted(
                neighborhood_edges(cur, x),
                key=lambda e: (cur.index(e[0]), cur.index(e[1])),
            )
            for r in range(len(inner) + 1):
                for subset in itertools.combinations(inner, r):
                    if recurse(eliminate(cur, x, frozenset(subset))):
                        return True
        dead.add(key)
        return False

    return recurse(g)

"""Elimination-ordering triangulation, exact optimality solvers, and junction
trees.

The three optimization objectives (fill-in count, elimination width, total
states over maximal cliques) each come with an exact desk-scale solver.
Fill-in and width use the subset DP in ``_kernels`` (2**n states, n <= 20 by
default); total states is not prefix-decomposable and uses branch and bound
over orderings with a smaller cap.
"""

from __future__ import annotations

import itertools
from typing import NamedTuple

from . import _kernels
from .graphs import (
    GraphError,
    ResourceLimitError,
    UndirectedGraph,
    check_ordering,
    maximal_cliques,
    find_peo,
    is_chordal,
)

DEFAULT_DP_CAP = 20
DEFAULT_STATES_CAP = 10


def _simulate(g, ordering):
    """Run the completion-elimination process; returns (fill, width).

    fill holds the accumulated deficiencies as canonical pairs of g; width is
    the maximum elimination-time degree.
    """
    check_ordering(g, ordering)
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    fill = set()
    width = 0
    for v in ordering:
        nbrs = g.sort(adj[v])
        width = max(width, len(nbrs))
        for a, b in itertools.combinations(nbrs, 2):
            if b not in adj[a]:
                adj[a].add(b)
                adj[b].add(a)
                fill.add(g.pair(a, b))
        for u in nbrs:
            adj[u].discard(v)
        del adj[v]
    return frozenset(fill), width


def triangulate_by_ordering(g, ordering):
    """Fill-in edge set accumulated by eliminating along the ordering."""
    fill, _ = _simulate(g, ordering)
    return fill


def width_of_ordering(g, ordering):
    """Maximum elimination-time degree along the ordering.

    Equals (max clique size of the induced triangulation) - 1.
    """
    _, width = _simulate(g, ordering)
    return width


def total_states(g_tri, states=None):
    """Sum over maximal cliques of the product of per-vertex state counts.

    Every vertex missing from ``states`` is binary.
    """
    if not is_chordal(g_tri):
        raise GraphError("total_states requires a chordal graph")
    states = states or {}
    total = 0
    for clique in maximal_cliques(g_tri):
        prod = 1
        for v in clique:
            prod *= states.get(v, 2)
        total += prod
    return total


class MinFill(NamedTuple):
    size: int
    fill: frozenset
    ordering: tuple


class Treewidth(NamedTuple):
    width: int
    ordering: tuple


class TotalStates(NamedTuple):
    states: int
    ordering: tuple


def _mode_of(g, restriction):
    if restriction is None:
        return _kernels.MODE_NONE, 0
    kind, w = restriction
    widx = g.index(w)
    if kind == "first":
        return _kernels.MODE_FIRST, widx
    if kind == "last":
        return _kernels.MODE_LAST, widx
    raise GraphError(f"unknown restriction kind {kind!r}")


def _run_dp(g, objective, restriction, cap):
    n = len(g)
    if n > cap:
        raise ResourceLimitError(f"{n} vertices exceed the subset DP cap of {cap}")
    mode, widx = _mode_of(g, restriction)
    if n == 0:
        return 0, ()
    masks = _kernels.adjacency_masks(g)
    dp, choice = _kernels.subset_dp(masks, n, mode, widx, objective)
    full = (1 << n) - 1
    value = int(dp[full])
    order = []
    s = full
    while s:
        v = int(choice[s])
        order.append(g.vertices[v])
        s &= ~(1 << v)
    return value, tuple(reversed(order))


def min_fill_exact(g, restriction=None, cap=DEFAULT_DP_CAP):
    """Global minimum fill-in over all (optionally restricted) orderings."""
    value, ordering = _run_dp(g, _kernels.OBJ_SUM, restriction, cap)
    size = value - g.num_edges()
    fill = triangulate_by_ordering(g, ordering) if ordering else frozenset()
    return MinFill(size=size, fill=fill, ordering=ordering)


def treewidth_exact(g, restriction=None, cap=DEFAULT_DP_CAP):
    """Exact treewidth: minimum over orderings of the max elimination degree."""
    value, ordering = _run_dp(g, _kernels.OBJ_MAX, restriction, cap)
    return Treewidth(width=value, ordering=ordering)


def total_states_exact(g, states=None, restriction=None, cap=DEFAULT_STATES_CAP):
    """Minimum total states over all triangulations by elimination ordering.

    Branch and bound: the running sum over already-maximal cliques only
    grows, so it prunes against the best complete ordering found so far.
    """
    n = len(g)
    if n > cap:
        raise ResourceLimitError(f"{n} vertices exceed the total-states cap of {cap}")
    states = states or {}
    if restriction is not None:
        g.index(restriction[1])
    if n == 0:
        return TotalStates(states=0, ordering=())

    def clique_states(clique):
        prod = 1
        for v in clique:
            prod *= states.get(v, 2)
        return prod

    best = [None, None]

    def dfs(adj, prefix, cliques, partial):
        if best[0] is not None and partial >= best[0]:
            return
        if not adj:
            best[0] = partial
            best[1] = tuple(prefix)
            return
        remaining = g.sort(adj)
        for v in remaining:
            if restriction is not None:
                kind, w = restriction
                if kind == "first" and not prefix and v != w:
                    continue
                if kind == "last" and v == w and len(adj) > 1:
                    continue
            clique = frozenset(adj[v]) | {v}
            contribution = 0
            if not any(clique <= c for c in cliques):
                contribution = clique_states(clique)
            if best[0] is not None and partial + contribution >= best[0]:
                continue
            nxt = {u: set(s) for u, s in adj.items() if u != v}
            nbrs = list(adj[v])
            for a, b in itertools.combinations(nbrs, 2):
                nxt[a].add(b)
                nxt[b].add(a)
            for u in nbrs:
                nxt[u].discard(v)
            prefix.append(v)
            dfs(nxt, prefix, cliques + [clique], partial + contribution)
            prefix.pop()

    dfs({v: set(g.neighbors(v)) for v in g.vertices}, [], [], 0)
    return TotalStates(states=best[0], ordering=best[1])


def greedy_min_fill(g):
    """Repeatedly eliminate a vertex of minimum deficiency, ties by id."""
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    ordering = []
    fill = set()
    while adj:
        def cost(v):
            nbrs = list(adj[v])
            return sum(
                1
                for a, b in itertools.combinations(nbrs, 2)
                if b not in adj[a]
            )

        v = min(adj, key=lambda u: (cost(u), g.index(u)))
        ordering.append(v)
        nbrs = g.sort(adj[v])
        for a, b in itertools.combinations(nbrs, 2):
            if b not in adj[a]:
                adj[a].add(b)
                adj[b].add(a)
                fill.add(g.pair(a, b))
        for u in nbrs:
            adj[u].discard(v)
        del adj[v]
    return tuple(ordering), frozenset(fill)


class CliqueTree(NamedTuple):
    nodes: list        # list of vertex tuples (the maximal cliques)
    edges: list        # (i, j) node-index pairs, i < j
    separators: dict   # (i, j) -> vertex tuple


def junction_tree(g_tri):
    """Maximum-separator-weight spanning tree over the maximal cliques."""
    if not is_chordal(g_tri):
        raise GraphError("junction_tree requires a chordal graph")
    cliques = maximal_cliques(g_tri)
    k = len(cliques)
    sets = [frozenset(c) for c in cliques]
    candidates = sorted(
        ((i, j) for i in range(k) for j in range(i + 1, k)),
        key=lambda ij: (-len(sets[ij[0]] & sets[ij[1]]), ij),
    )
    parent = list(range(k))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    edges = []
    separators = {}
    for i, j in candidates:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            edges.append((i, j))
            separators[(i, j)] = tuple(g_tri.sort(sets[i] & sets[j]))
        if len(edges) == k - 1:
            break
    return CliqueTree(nodes=cliques, edges=edges, separators=separators)


def validate_tree_decomposition(g, tree):
    """Check junction tree conditions; returns (ok, first violated index).

    1: bags cover the vertex set; 2: every edge lies inside some bag;
    3: running intersection (bags containing any vertex form a subtree);
    4: every bag is complete in g.
    """
    bags = [frozenset(c) for c in tree.nodes]
    k = len(bags)
    covered = frozenset().union(*bags) if bags else frozenset()
    if covered != frozenset(g.vertices):
        return False, 1
    for u, v in g.edges():
        if not any(u in b and v in b for b in bags):
            return False, 2
    adj = {i: set() for i in range(k)}
    for i, j in tree.edges:
        adj[i].add(j)
        adj[j].add(i)

    def component(start, allowed):
        seen = {start}
        stack = [start]
        while stack:
            for j in adj[stack.pop()]:
                if j in allowed and j not in seen:
                    seen.add(j)
                    stack.append(j)
        return seen

    # a tree over the nodes: connected and exactly k-1 edges
    if k and (len(tree.edges) != k - 1
              or component(0, set(range(k))) != set(range(k))):
        return False, 3
    for v in g.vertices:
        holders = {i for i in range(k) if v in bags[i]}
        if component(min(holders), holders) != holders:
            return False, 3
    for b in bags:
        for u, v in itertools.combinations(g.sort(b), 2):
            if not g.has_edge(u, v):
                return False, 4
    return True, None

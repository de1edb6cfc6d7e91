"""Simple graph primitives: undirected graphs, DAGs, and elimination machinery.

Vertex ids are opaque hashable tokens.  Insertion order gives a stable total
order over the vertices of a graph, and every set-valued result is emitted in
that order so witnesses are reproducible bit for bit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class GraphError(ValueError):
    """Domain error: unknown vertex, bad ordering, malformed structure."""


class ContractViolation(ValueError):
    """An argument breaks a documented precondition."""


class ResourceLimitError(RuntimeError):
    """Input exceeds the size cap of an exponential procedure."""


class UndirectedGraph:
    """Immutable simple undirected graph (no loops, no parallel edges)."""

    def __init__(self, vertices=(), edges=()):
        self._index = {}
        self._adj = {}
        for v in vertices:
            self._add_vertex(v)
        for u, v in edges:
            self._add_vertex(u)
            self._add_vertex(v)
            if u == v:
                raise GraphError(f"self-loop at {u!r}")
            self._adj[u].add(v)
            self._adj[v].add(u)
        self._adj = {v: frozenset(s) for v, s in self._adj.items()}

    def _add_vertex(self, v):
        if v not in self._index:
            self._index[v] = len(self._index)
            self._adj[v] = set()

    @property
    def vertices(self):
        return tuple(self._index)

    def __len__(self):
        return len(self._index)

    def __contains__(self, v):
        return v in self._index

    def index(self, v):
        try:
            return self._index[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def neighbors(self, v):
        self.index(v)
        return self._adj[v]

    def degree(self, v):
        return len(self.neighbors(v))

    def max_degree(self):
        return max((len(s) for s in self._adj.values()), default=0)

    def has_edge(self, u, v):
        return u in self._adj and v in self._adj[u]

    def pair(self, u, v):
        """Canonical (u, v) tuple ordered by vertex insertion index."""
        if self.index(u) > self.index(v):
            u, v = v, u
        return (u, v)

    def edges(self):
        out = []
        for u in self._index:
            for v in self._adj[u]:
                if self._index[u] < self._index[v]:
                    out.append((u, v))
        out.sort(key=lambda e: (self._index[e[0]], self._index[e[1]]))
        return out

    def num_edges(self):
        return sum(len(s) for s in self._adj.values()) // 2

    def sort(self, vs):
        """Vertices of this graph sorted by insertion index."""
        return sorted(vs, key=self.index)

    def with_edges(self, extra):
        return UndirectedGraph(self.vertices, list(self.edges()) + list(extra))

    def key(self):
        """Hashable identity: (vertex set, edge set)."""
        return (frozenset(self._index),
                frozenset(frozenset(e) for e in self.edges()))

    def is_connected(self):
        if len(self) <= 1:
            return True
        start = next(iter(self._index))
        seen = {start}
        stack = [start]
        while stack:
            for u in self._adj[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == len(self)

    def __repr__(self):
        return f"UndirectedGraph({list(self.vertices)!r}, {self.edges()!r})"


class Dag:
    """Directed acyclic graph; at most one arc per unordered vertex pair."""

    def __init__(self, vertices=(), arcs=()):
        self._index = {}
        self._parents = {}
        self._children = {}
        for v in vertices:
            self._add_vertex(v)
        for u, v in arcs:
            self._add_vertex(u)
            self._add_vertex(v)
            if u == v:
                raise GraphError(f"self-loop at {u!r}")
            if u in self._parents[v] or v in self._parents[u]:
                raise GraphError(f"duplicate arc between {u!r} and {v!r}")
            self._parents[v].add(u)
            self._children[u].add(v)
        if self._topological_order() is None:
            raise GraphError("arcs form a directed cycle")

    def _add_vertex(self, v):
        if v not in self._index:
            self._index[v] = len(self._index)
            self._parents[v] = set()
            self._children[v] = set()

    @property
    def vertices(self):
        return tuple(self._index)

    def parents(self, v):
        if v not in self._index:
            raise GraphError(f"unknown vertex {v!r}")
        return frozenset(self._parents[v])

    def arcs(self):
        out = []
        for u in self._index:
            for v in sorted(self._children[u], key=self._index.__getitem__):
                out.append((u, v))
        return out

    def _topological_order(self):
        indeg = {v: len(p) for v, p in self._parents.items()}
        ready = [v for v in self._index if indeg[v] == 0]
        order = []
        while ready:
            v = ready.pop()
            order.append(v)
            for u in self._children[v]:
                indeg[u] -= 1
                if indeg[u] == 0:
                    ready.append(u)
        return order if len(order) == len(self._index) else None

    def skeleton(self):
        return UndirectedGraph(self.vertices, self.arcs())


@dataclass
class EliminationKit:
    """An ordering together with one excess edge set per vertex."""

    ordering: tuple
    excesses: dict  # vertex -> frozenset of (u, v) pairs


def check_ordering(g, ordering):
    if set(ordering) != set(g.vertices) or len(ordering) != len(g):
        raise GraphError("ordering does not cover the vertex set exactly")


def deficiency(g, x):
    """Missing edges among the neighbours of x."""
    nbrs = g.sort(g.neighbors(x))
    return frozenset(
        (u, v) for u, v in itertools.combinations(nbrs, 2) if not g.has_edge(u, v)
    )


def is_simplicial(g, x):
    nbrs = g.sort(g.neighbors(x))
    for u, v in itertools.combinations(nbrs, 2):
        if not g.has_edge(u, v):
            return False
    return True


def neighborhood_edges(g, x):
    """Edges of g with both endpoints in N(x)."""
    nbrs = g.sort(g.neighbors(x))
    return frozenset(
        (u, v) for u, v in itertools.combinations(nbrs, 2) if g.has_edge(u, v)
    )


def eliminate(g, v, excess=frozenset()):
    """Remove v, its incident edges, and the excess edges among N(v)."""
    nbrs = g.neighbors(v)
    drop = set()
    for a, b in excess:
        if a not in nbrs or b not in nbrs or not g.has_edge(a, b):
            raise ContractViolation(
                f"excess edge ({a!r}, {b!r}) is not an edge inside N({v!r})"
            )
        drop.add(frozenset((a, b)))
    keep = [
        e for e in g.edges()
        if v not in e and frozenset(e) not in drop
    ]
    rest = [u for u in g.vertices if u != v]
    return UndirectedGraph(rest, keep)


def find_peo(g):
    """Perfect elimination ordering of g, or None if g is not chordal.

    Maximum cardinality search followed by a zero-deficiency verification of
    the reversed visit order.
    """
    n = len(g)
    if n == 0:
        return ()
    weight = {v: 0 for v in g.vertices}
    visit = []
    remaining = set(g.vertices)
    while remaining:
        v = max(remaining, key=lambda u: (weight[u], -g.index(u)))
        visit.append(v)
        remaining.remove(v)
        for u in g.neighbors(v):
            if u in remaining:
                weight[u] += 1
    peo = tuple(reversed(visit))
    pos = {v: i for i, v in enumerate(peo)}
    for i, v in enumerate(peo):
        later = [u for u in g.neighbors(v) if pos[u] > i]
        for a, b in itertools.combinations(later, 2):
            if not g.has_edge(a, b):
                return None
    return peo


def is_chordal(g):
    return find_peo(g) is not None


def maximal_cliques(g):
    """Inclusion-maximal cliques, Bron-Kerbosch with pivoting.

    Each clique is a tuple in vertex order; the list is sorted likewise.
    """
    out = []
    adj = {v: g.neighbors(v) for v in g.vertices}

    def expand(r, p, x):
        if not p and not x:
            out.append(tuple(g.sort(r)))
            return
        pivot = min(p | x, key=lambda u: (-len(adj[u] & p), g.index(u)))
        for v in g.sort(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    expand(frozenset(), set(g.vertices), set())
    out.sort(key=lambda c: tuple(g.index(v) for v in c))
    return out

"""Bipartite reduction gadgets and the closed-form quantities they realize.

Three constructions turn a source graph into a bipartite gadget whose
partition completion is a moral graph:

* ``ola``  - one copy per vertex, two nodes per edge, n - d(u) residuals;
  optimal linear arrangement cost maps to minimum fill-in.
* ``mcla`` - Delta+1 copies per vertex, two nodes per edge,
  Delta + 1 - d(u) residuals; linear cut value maps to treewidth.
* ``eds``  - one copy per vertex, one node per edge, Delta + 1 - d(u)
  residuals; elimination degree sequences map to total states.

Each builder optionally saturates a chosen vertex w (and all its copies),
which is the step that makes the completed graph moral.  Passing ``w=None``
builds the unsaturated base gadget.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import NamedTuple

from .graphs import (
    EliminationKit,
    GraphError,
    UndirectedGraph,
    check_ordering,
    eliminate,
    find_peo,
)


@dataclass(frozen=True)
class BipartiteGadget:
    kind: str                      # "ola" | "mcla" | "eds" | "raw"
    p: tuple
    q: tuple
    base_edges: frozenset          # (p, q) pairs, P side first
    saturation_edges: frozenset    # (p, q) pairs added by the saturation step
    roles: dict = field(default_factory=dict, compare=False)
    source: UndirectedGraph | None = field(default=None, compare=False)
    w: object = None

    @property
    def edges(self):
        return self.base_edges | self.saturation_edges

    def p_neighbors(self, u):
        return frozenset(q for p, q in self.edges if p == u)

    def q_neighbors(self, u):
        return frozenset(p for p, q in self.edges if q == u)

    def with_fill(self, fill):
        """Gadget with extra (p, q) edges folded into the base edge set."""
        return BipartiteGadget(
            kind=self.kind, p=self.p, q=self.q,
            base_edges=self.base_edges | frozenset(fill),
            saturation_edges=self.saturation_edges,
            roles=self.roles, source=self.source, w=self.w,
        )


def bipartite(p, q, edges):
    """Ad-hoc bipartite graph as a role-free gadget."""
    p, q = tuple(p), tuple(q)
    if set(p) & set(q):
        raise GraphError("partitions overlap")
    pset, qset = set(p), set(q)
    norm = set()
    for a, b in edges:
        if a in pset and b in qset:
            norm.add((a, b))
        elif b in pset and a in qset:
            norm.add((b, a))
        else:
            raise GraphError(f"edge ({a!r}, {b!r}) does not cross the partition")
    return BipartiteGadget(kind="raw", p=p, q=q,
                           base_edges=frozenset(norm),
                           saturation_edges=frozenset())


def edge_node_name(g, e, j):
    u, v = g.pair(*e)
    return f"e:{u}-{v}#{j}"


def residual_name(u, j):
    return f"r:{u}#{j}"


def copy_name(u, j):
    return f"{u}#{j}"


def _check_source(g, w):
    if len(g) < 2:
        raise GraphError("source graph needs at least two vertices")
    if not g.is_connected():
        raise GraphError("source graph must be connected")
    if w is not None:
        g.index(w)


def _saturate(p_targets, q, base):
    have = set(base)
    return frozenset(
        (u, v) for u in p_targets for v in q if (u, v) not in have
    )


def build_ola_gadget(g, w=None):
    """Optimal-linear-arrangement gadget; w=None skips the saturation step."""
    _check_source(g, w)
    n = len(g)
    p = g.vertices
    roles = {u: ("copy", u, 1) for u in p}
    q = []
    edges = set()
    for e in g.edges():
        for j in (1, 2):
            name = edge_node_name(g, e, j)
            q.append(name)
            roles[name] = ("edge", g.pair(*e), j)
            edges.add((e[0], name))
            edges.add((e[1], name))
    for u in p:
        for j in range(1, n - g.degree(u) + 1):
            name = residual_name(u, j)
            q.append(name)
            roles[name] = ("residual", u, j)
            edges.add((u, name))
    sat = _saturate([w], q, edges) if w is not None else frozenset()
    return BipartiteGadget(kind="ola", p=p, q=tuple(q),
                           base_edges=frozenset(edges),
                           saturation_edges=sat,
                           roles=roles, source=g, w=w)


def build_mcla_gadget(g, w=None):
    """Minimum-cut-linear-arrangement gadget with Delta+1 copies per vertex."""
    _check_source(g, w)
    width = g.max_degree() + 1
    p = []
    roles = {}
    for u in g.vertices:
        for j in range(1, width + 1):
            name = copy_name(u, j)
            p.append(name)
            roles[name] = ("copy", u, j)
    copies = {u: [copy_name(u, j) for j in range(1, width + 1)]
              for u in g.vertices}
    q = []
    edges = set()
    for e in g.edges():
        for j in (1, 2):
            name = edge_node_name(g, e, j)
            q.append(name)
            roles[name] = ("edge", g.pair(*e), j)
            for end in e:
                for c in copies[end]:
                    edges.add((c, name))
    for u in g.vertices:
        for j in range(1, width - g.degree(u) + 1):
            name = residual_name(u, j)
            q.append(name)
            roles[name] = ("residual", u, j)
            for c in copies[u]:
                edges.add((c, name))
    sat = _saturate(copies[w], q, edges) if w is not None else frozenset()
    return BipartiteGadget(kind="mcla", p=tuple(p), q=tuple(q),
                           base_edges=frozenset(edges),
                           saturation_edges=sat,
                           roles=roles, source=g, w=w)


def build_eds_gadget(g, w=None):
    """Elimination-degree-sequence gadget: one node per edge."""
    _check_source(g, w)
    width = g.max_degree() + 1
    p = g.vertices
    roles = {u: ("copy", u, 1) for u in p}
    q = []
    edges = set()
    for e in g.edges():
        name = edge_node_name(g, e, 1)
        q.append(name)
        roles[name] = ("edge", g.pair(*e), 1)
        edges.add((e[0], name))
        edges.add((e[1], name))
    for u in p:
        for j in range(1, width - g.degree(u) + 1):
            name = residual_name(u, j)
            q.append(name)
            roles[name] = ("residual", u, j)
            edges.add((u, name))
    sat = _saturate([w], q, edges) if w is not None else frozenset()
    return BipartiteGadget(kind="eds", p=p, q=tuple(q),
                           base_edges=frozenset(edges),
                           saturation_edges=sat,
                           roles=roles, source=g, w=w)


def partition_completion(b, scope="both"):
    """Completed graph: bipartite edges plus clique(P) (and clique(Q))."""
    if scope not in ("both", "left"):
        raise GraphError(f"unknown completion scope {scope!r}")
    edges = list(b.edges)
    edges.extend(itertools.combinations(b.p, 2))
    if scope == "both":
        edges.extend(itertools.combinations(b.q, 2))
    return UndirectedGraph(tuple(b.p) + tuple(b.q), edges)


def saturated_vertices(b):
    """Vertices adjacent to the entire opposite partition, in gadget order."""
    out = []
    qset = frozenset(b.q)
    pset = frozenset(b.p)
    for u in b.p:
        if b.p_neighbors(u) == qset:
            out.append(u)
    for v in b.q:
        if b.q_neighbors(v) == pset:
            out.append(v)
    return tuple(out)


def is_chain(b):
    """(is chain, witness ordering of P with descending neighbourhoods)."""
    order = {v: i for i, v in enumerate(b.p)}
    nbrs = {u: b.p_neighbors(u) for u in b.p}
    witness = tuple(sorted(b.p, key=lambda u: (-len(nbrs[u]), order[u])))
    for a, c in zip(witness, witness[1:]):
        if not nbrs[c] <= nbrs[a]:
            return False, None
    return True, witness


class ChainFillResult(NamedTuple):
    sigma: dict       # q vertex -> highest occupied position in alpha
    fill: frozenset   # missing (p, q) edges below sigma


def chain_fill_set(b, alpha):
    """Fill edges that make the gadget a chain w.r.t. alpha.

    alpha orders P; every q vertex is connected down to position
    sigma(q) = max{i | q adjacent to alpha(i)}.
    """
    if set(alpha) != set(b.p) or len(alpha) != len(b.p):
        raise GraphError("alpha does not order the P side exactly")
    pos = {u: i + 1 for i, u in enumerate(alpha)}
    edges = b.edges
    sigma = {}
    fill = set()
    for v in b.q:
        nbrs = b.q_neighbors(v)
        if not nbrs:
            raise GraphError(f"Q vertex {v!r} has no neighbours; sigma undefined")
        sigma[v] = max(pos[u] for u in nbrs)
        for j in range(1, sigma[v]):
            u = alpha[j - 1]
            if (u, v) not in edges:
                fill.add((u, v))
    return ChainFillResult(sigma=sigma, fill=frozenset(fill))


def ola_cost(g, alpha):
    """Sum over edges of the position distance of their endpoints."""
    check_ordering(g, alpha)
    pos = {v: i + 1 for i, v in enumerate(alpha)}
    return sum(abs(pos[u] - pos[v]) for u, v in g.edges())


def linear_cut_value(g, alpha):
    """Max over cut positions of the number of edges crossing."""
    check_ordering(g, alpha)
    pos = {v: i + 1 for i, v in enumerate(alpha)}
    n = len(alpha)
    best = 0
    for i in range(1, n):
        cut = sum(
            1 for u, v in g.edges()
            if min(pos[u], pos[v]) <= i < max(pos[u], pos[v])
        )
        best = max(best, cut)
    return best


def elim_degree_sequence(g, alpha):
    """N(i): later neighbours of alpha(i); length |V|, last entry 0."""
    check_ordering(g, alpha)
    pos = {v: i + 1 for i, v in enumerate(alpha)}
    return tuple(
        sum(1 for u in g.neighbors(v) if pos[u] > pos[v]) for v in alpha
    )


def eval_lambda(g, w, k):
    """Fill-in target for the saturated ola gadget."""
    n = len(g)
    return k + n * (n - 1) * (n - 2) // 2 - 2 * g.num_edges() + g.degree(w)


def eval_saturation(g, w):
    """Number of edges the saturation step adds: |V|(|V|-1) - d(w)."""
    n = len(g)
    return n * (n - 1) - g.degree(w)


def eval_omega(g, k):
    """Max clique size target for the mcla gadget: (Delta+1)(|V|+1) + k."""
    return (g.max_degree() + 1) * (len(g) + 1) + k


class KiDelta(NamedTuple):
    ki: tuple        # per-position maximal clique sizes
    delta_sum: int   # sum of the k_i values (the statement's reading)
    delta_pow: int   # sum of 2**k_i (the binary total-states reading)


def eval_ki_delta(g, alpha, d_seq):
    """Maximal clique sizes of the triangulated eds gadget, and both delta
    readings (plain sum of the k_i and binary total states)."""
    check_ordering(g, alpha)
    n = len(g)
    if len(d_seq) != n:
        raise GraphError("degree sequence length must equal |V|")
    width = g.max_degree()
    ki = []
    acc = 0
    for i in range(1, n + 1):
        acc += d_seq[i - 1] - g.degree(alpha[i - 1])
        ki.append(n + width * i + 1 + acc)
    ki = tuple(ki)
    return KiDelta(ki=ki,
                   delta_sum=sum(ki),
                   delta_pow=sum(2 ** k for k in ki))


def pi_p_from_alpha(g, alpha):
    """Copy ordering of the mcla gadget induced by a source ordering.

    The copies of alpha(i) fill the i-th block of Delta+1 positions, highest
    copy index first: position of u_i^j is (Delta+1)*i - j + 1.
    """
    check_ordering(g, alpha)
    width = g.max_degree() + 1
    out = []
    for i in range(1, len(alpha) + 1):
        for j in range(width, 0, -1):
            out.append(copy_name(alpha[i - 1], j))
    return tuple(out)


def witness_kit(b):
    """Perfect elimination kit of the completed saturated gadget.

    First step removes the chosen vertex's first residual together with the
    saturation edges and the whole Q clique; the remainder is the left-only
    completion of the base gadget minus that residual, which is chordal and
    is finished with an empty-excess PEO.
    """
    if b.w is None:
        raise GraphError("witness kit needs a saturated gadget")
    completed = partition_completion(b, "both")
    r1 = residual_name(b.w, 1)
    excess = set()
    for u, v in b.saturation_edges:
        excess.add(completed.pair(u, v))
    for u, v in itertools.combinations(b.q, 2):
        if r1 not in (u, v):
            excess.add(completed.pair(u, v))
    rest = eliminate(completed, r1, frozenset(excess))
    peo = find_peo(rest)
    if peo is None:
        raise GraphError("remainder after the witness step is not chordal")
    excesses = {v: frozenset() for v in peo}
    excesses[r1] = frozenset(excess)
    return EliminationKit(ordering=(r1,) + peo, excesses=excesses)

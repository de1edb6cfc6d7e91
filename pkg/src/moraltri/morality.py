"""Moralization and the three equivalent characterizations of graph morality.

A graph is moral iff it is weakly recursively simplicial iff it admits a
perfect elimination kit.  The decision procedure here is an exact backtracking
search over kits; no polynomial algorithm is claimed.
"""

from __future__ import annotations

import itertools

from .graphs import (
    Dag,
    EliminationKit,
    GraphError,
    ResourceLimitError,
    UndirectedGraph,
    eliminate,
    find_peo,
    is_simplicial,
    neighborhood_edges,
)

DEFAULT_PEK_CAP = 12


def moralize(d):
    """Moral graph of a DAG plus the set of marrying edges that were added.

    Returns (graph, fill) where fill contains one canonical pair per
    non-adjacent parent pair, reported once even when shared by several
    children.
    """
    if not isinstance(d, Dag):
        raise GraphError("moralize expects a Dag")
    skeleton = d.skeleton()
    fill = set()
    for x in d.vertices:
        parents = skeleton.sort(d.parents(x))
        for u, v in itertools.combinations(parents, 2):
            if not skeleton.has_edge(u, v):
                fill.add(skeleton.pair(u, v))
    fill = frozenset(fill)
    moral = skeleton.with_edges(fill)
    return moral, fill


def verify_pek(g, kit):
    """Check that eliminating kit.ordering with kit.excesses keeps every
    vertex simplicial at its turn."""
    if set(kit.ordering) != set(g.vertices) or len(kit.ordering) != len(g):
        raise GraphError("kit ordering does not cover the vertex set exactly")
    cur = g
    for i, v in enumerate(kit.ordering):
        if not is_simplicial(cur, v):
            return False
        excess = kit.excesses.get(v, frozenset())
        cur = eliminate(cur, v, excess)  # raises ContractViolation on bad excess
    return True


def find_pek(g, max_vertices=DEFAULT_PEK_CAP):
    """Search for a perfect elimination kit; None if the graph has none.

    Backtracking over (simplicial vertex, excess subset) choices, smallest
    excesses first so chordal graphs resolve immediately.  Failed subgraphs
    are memoized by their edge-set key.
    """
    if len(g) > max_vertices:
        raise ResourceLimitError(
            f"{len(g)} vertices exceed the kit search cap of {max_vertices}"
        )
    failed = set()

    def search(cur):
        if len(cur) == 0:
            return []
        key = cur.key()
        if key in failed:
            return None
        for x in cur.vertices:
            if not is_simplicial(cur, x):
                continue
            inner = sorted(
                neighborhood_edges(cur, x),
                key=lambda e: (cur.index(e[0]), cur.index(e[1])),
            )
            for r in range(len(inner) + 1):
                for subset in itertools.combinations(inner, r):
                    rest = search(eliminate(cur, x, frozenset(subset)))
                    if rest is not None:
                        return [(x, frozenset(subset))] + rest
        failed.add(key)
        return None

    steps = search(g)
    if steps is None:
        return None
    return EliminationKit(
        ordering=tuple(x for x, _ in steps),
        excesses={x: e for x, e in steps},
    )


def is_moral(g, max_vertices=DEFAULT_PEK_CAP):
    return find_pek(g, max_vertices=max_vertices) is not None


def chordal_kit(g):
    """Empty-excess kit from a PEO; None when g is not chordal."""
    peo = find_peo(g)
    if peo is None:
        return None
    return EliminationKit(ordering=peo, excesses={v: frozenset() for v in peo})

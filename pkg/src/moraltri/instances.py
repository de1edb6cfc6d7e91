"""Small named instances used by the docs, the tests, and the verify command."""

from __future__ import annotations

from .graphs import Dag, UndirectedGraph


def demo_dag():
    """Five-variable DAG whose moralization marries v3 and v4."""
    return Dag(
        ["v1", "v2", "v3", "v4", "v5"],
        [("v1", "v2"), ("v1", "v3"), ("v2", "v4"), ("v3", "v5"), ("v4", "v5")],
    )


def demo_moral_graph():
    """Moral graph of demo_dag: a 4-cycle sharing an edge with a triangle."""
    return UndirectedGraph(
        ["v1", "v2", "v3", "v4", "v5"],
        [("v1", "v2"), ("v1", "v3"), ("v2", "v4"), ("v3", "v4"),
         ("v3", "v5"), ("v4", "v5")],
    )


def non_wrs_graph():
    """demo_moral_graph minus v4v5: eliminating its only simplicial vertex
    leaves a chordless 4-cycle, so no elimination kit exists."""
    return UndirectedGraph(
        ["v1", "v2", "v3", "v4", "v5"],
        [("v1", "v2"), ("v1", "v3"), ("v2", "v4"), ("v3", "v4"), ("v3", "v5")],
    )


def paw_graph():
    """Triangle a-b-c with a pendant d on c; the running reduction example."""
    return UndirectedGraph(
        ["a", "b", "c", "d"],
        [("a", "b"), ("a", "c"), ("b", "c"), ("c", "d")],
    )


def path_graph(k, prefix="p"):
    names = [f"{prefix}{i}" for i in range(1, k + 1)]
    return UndirectedGraph(names, list(zip(names, names[1:])))


def cycle_graph(k, prefix="c"):
    names = [f"{prefix}{i}" for i in range(1, k + 1)]
    edges = list(zip(names, names[1:])) + [(names[-1], names[0])]
    return UndirectedGraph(names, edges)


def complete_graph(k, prefix="k"):
    import itertools

    names = [f"{prefix}{i}" for i in range(1, k + 1)]
    return UndirectedGraph(names, list(itertools.combinations(names, 2)))

import importlib.util
import os

import pytest

from moraltri import (
    GraphError,
    ResourceLimitError,
    UndirectedGraph,
    greedy_min_fill,
    is_chordal,
    junction_tree,
    maximal_cliques,
    min_fill_exact,
    total_states,
    total_states_exact,
    treewidth_exact,
    triangulate_by_ordering,
    validate_tree_decomposition,
    width_of_ordering,
)
from moraltri.instances import (
    complete_graph,
    cycle_graph,
    demo_moral_graph,
    path_graph,
)


def triangulated_demo():
    return demo_moral_graph().with_edges([("v1", "v4")])


def test_triangulate_by_ordering_demo():
    fill = triangulate_by_ordering(demo_moral_graph(), ("v5", "v3", "v1", "v2", "v4"))
    assert fill == frozenset({("v1", "v4")})


def test_width_of_ordering_examples():
    assert width_of_ordering(cycle_graph(4), ("c1", "c2", "c3", "c4")) == 2
    assert width_of_ordering(demo_moral_graph(), ("v5", "v3", "v1", "v2", "v4")) == 2
    assert width_of_ordering(complete_graph(4), tuple(complete_graph(4).vertices)) == 3


def test_width_plus_one_is_max_clique_of_the_triangulation():
    import itertools
    g = demo_moral_graph()
    for alpha in itertools.permutations(g.vertices):
        fill = triangulate_by_ordering(g, alpha)
        tri = g.with_edges(fill)
        assert width_of_ordering(g, alpha) + 1 == max(
            len(c) for c in maximal_cliques(tri))


def test_total_states_binary():
    assert total_states(cycle_graph(3)) == 8
    assert total_states(triangulated_demo()) == 24


def test_total_states_custom_cardinalities():
    g = cycle_graph(3)
    assert total_states(g, {"c1": 3, "c2": 4, "c3": 5}) == 60


def test_total_states_rejects_non_chordal():
    with pytest.raises(GraphError):
        total_states(cycle_graph(4))


def test_min_fill_exact_examples():
    assert min_fill_exact(cycle_graph(4)).size == 1
    assert min_fill_exact(complete_graph(4)).size == 0
    res = min_fill_exact(demo_moral_graph())
    assert res.size == 1
    # tie between the two chords; the DP tie-break lands on v2v3
    assert res.fill == frozenset({("v2", "v3")})
    assert res.ordering == ("v5", "v4", "v3", "v2", "v1")


def test_min_fill_result_triangulates():
    g = cycle_graph(6)
    res = min_fill_exact(g)
    assert res.size == 3 == len(res.fill)
    assert is_chordal(g.with_edges(res.fill))


def test_min_fill_restrictions():
    g = demo_moral_graph()
    res = min_fill_exact(g, ("first", "v1"))
    assert res.ordering[0] == "v1"
    assert res.size == 1  # eliminating v1 first adds v2v3, the rest is chordal
    res = min_fill_exact(g, ("last", "v1"))
    assert res.ordering[-1] == "v1"
    assert res.size == 1


def test_treewidth_examples():
    assert treewidth_exact(complete_graph(5)).width == 4
    assert treewidth_exact(cycle_graph(4)).width == 2
    assert treewidth_exact(path_graph(6)).width == 1
    assert treewidth_exact(demo_moral_graph()).width == 2


def test_total_states_exact_demo():
    res = total_states_exact(demo_moral_graph())
    assert res.states == 24
    fill = triangulate_by_ordering(demo_moral_graph(), res.ordering)
    assert total_states(demo_moral_graph().with_edges(fill)) == 24


def test_total_states_exact_restriction():
    res = total_states_exact(demo_moral_graph(), restriction=("first", "v1"))
    assert res.ordering[0] == "v1"


def test_caps_raise_resource_errors():
    big = path_graph(21)
    with pytest.raises(ResourceLimitError):
        min_fill_exact(big)
    with pytest.raises(ResourceLimitError):
        total_states_exact(path_graph(11))


def test_greedy_min_fill_is_a_triangulation():
    g = cycle_graph(6)
    ordering, fill = greedy_min_fill(g)
    assert triangulate_by_ordering(g, ordering) == fill
    assert is_chordal(g.with_edges(fill))
    assert greedy_min_fill(demo_moral_graph())[1] == frozenset({("v2", "v3")})


def test_junction_tree_demo():
    g = triangulated_demo()
    tree = junction_tree(g)
    assert tree.nodes == [("v1", "v2", "v4"), ("v1", "v3", "v4"), ("v3", "v4", "v5")]
    assert sorted(tree.separators.values()) == [("v1", "v4"), ("v3", "v4")]
    assert validate_tree_decomposition(g, tree) == (True, None)


def test_junction_tree_requires_chordal():
    with pytest.raises(GraphError):
        junction_tree(cycle_graph(4))


def test_validate_reports_first_violated_condition():
    from moraltri import CliqueTree
    g = triangulated_demo()
    good = junction_tree(g)
    missing_vertex = CliqueTree(nodes=good.nodes[:2], edges=[(0, 1)],
                                separators={})
    assert validate_tree_decomposition(g, missing_vertex) == (False, 1)
    uncovered_edge = CliqueTree(
        nodes=[("v1", "v2", "v4"), ("v1", "v3", "v4"), ("v4", "v5"), ("v3",)],
        edges=[(0, 1), (1, 2), (1, 3)], separators={})
    assert validate_tree_decomposition(g, uncovered_edge) == (False, 2)
    disconnected = CliqueTree(nodes=good.nodes, edges=[(0, 1), (0, 1)],
                              separators={})
    assert validate_tree_decomposition(g, disconnected) == (False, 3)
    broken_subtree = CliqueTree(nodes=good.nodes, edges=[(0, 2), (1, 2)],
                                separators={})
    assert validate_tree_decomposition(g, broken_subtree) == (False, 3)
    incomplete_bag = CliqueTree(
        nodes=[tuple(g.vertices), ("v1", "v2", "v4")],
        edges=[(0, 1)], separators={})
    assert validate_tree_decomposition(g, incomplete_bag) == (False, 4)


def load_fallback_kernels():
    import moraltri._kernels as k
    spec = importlib.util.spec_from_file_location("_kernels_fallback", k.__file__)
    mod = importlib.util.module_from_spec(spec)
    os.environ["MORALTRI_NO_NUMBA"] = "1"
    try:
        spec.loader.exec_module(mod)
    finally:
        os.environ.pop("MORALTRI_NO_NUMBA")
    return mod


def test_fallback_kernel_matches_the_compiled_one():
    import random
    import moraltri._kernels as active
    fallback = load_fallback_kernels()
    assert not fallback.NUMBA_ENABLED
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(2, 8)
        names = [f"v{i}" for i in range(n)]
        edges = [(a, b) for i, a in enumerate(names) for b in names[i + 1:]
                 if rng.random() < 0.4]
        g = UndirectedGraph(names, edges)
        masks = active.adjacency_masks(g)
        w = rng.randrange(n)
        for mode in (active.MODE_NONE, active.MODE_FIRST, active.MODE_LAST):
            for obj in (active.OBJ_SUM, active.OBJ_MAX):
                d1, c1 = active.subset_dp(masks, n, mode, w, obj)
                d2, c2 = fallback.subset_dp(masks, n, mode, w, obj)
                assert (d1 == d2).all()
                assert (c1 == c2).all()

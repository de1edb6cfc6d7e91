import pytest

from moraltri import (
    GraphError,
    UndirectedGraph,
    bipartite,
    build_eds_gadget,
    build_mcla_gadget,
    build_ola_gadget,
    chain_fill_set,
    eval_ki_delta,
    eval_lambda,
    eval_omega,
    eval_saturation,
    is_chain,
    is_chordal,
    linear_cut_value,
    ola_cost,
    partition_completion,
    pi_p_from_alpha,
    saturated_vertices,
    verify_pek,
    witness_kit,
)
from moraltri.instances import complete_graph, paw_graph, path_graph
from moraltri.reductions import elim_degree_sequence


def k2():
    return UndirectedGraph(["u", "v"], [("u", "v")])


def test_ola_gadget_sizes_for_the_paw_graph():
    b = build_ola_gadget(paw_graph(), "c")
    assert len(b.p) == 4
    assert len(b.q) == 16
    assert len(b.saturation_edges) == 9 == eval_saturation(paw_graph(), "c")


def test_ola_gadget_sizes_for_k3():
    g = complete_graph(3, prefix="")
    b = build_ola_gadget(g, "1")
    assert len(b.q) == 9
    assert len(b.saturation_edges) == 4 == eval_saturation(g, "1")


def test_mcla_gadget_sizes():
    b = build_mcla_gadget(paw_graph(), "c")
    assert len(b.p) == 16  # (Delta+1) copies of each of the 4 vertices
    assert len(b.q) == 16
    assert len(build_mcla_gadget(path_graph(3), "p1").q) == 9


def test_eds_gadget_sizes():
    b = build_eds_gadget(paw_graph(), "c")
    assert len(b.p) == 4
    assert len(b.q) == 12
    assert len(b.saturation_edges) == 8
    assert len(build_eds_gadget(k2(), "u").q) == 3


def test_gadget_naming():
    b = build_mcla_gadget(paw_graph(), "c")
    assert "a#1" in b.p and "a#4" in b.p
    assert "e:a-b#2" in b.q
    assert "r:d#1" in b.q


def test_builders_reject_bad_sources():
    with pytest.raises(GraphError):
        build_ola_gadget(UndirectedGraph(["a", "b"], []), None)  # disconnected
    with pytest.raises(GraphError):
        build_ola_gadget(paw_graph(), "nope")


def test_partition_completion():
    b = bipartite(["a", "b"], ["x", "y"], [("a", "x")])
    both = partition_completion(b)
    assert both.has_edge("a", "b") and both.has_edge("x", "y")
    left = partition_completion(b, "left")
    assert left.has_edge("a", "b") and not left.has_edge("x", "y")
    with pytest.raises(GraphError):
        partition_completion(b, "right")


def test_saturated_vertices():
    b = bipartite(["a", "b"], ["x", "y"], [("a", "x"), ("a", "y"), ("b", "x")])
    assert saturated_vertices(b) == ("a", "x")
    assert saturated_vertices(build_ola_gadget(paw_graph(), None)) == ()
    sat = build_ola_gadget(paw_graph(), "c")
    assert "c" in saturated_vertices(sat)


def test_is_chain():
    chain = bipartite(["a", "b"], ["x", "y"], [("a", "x"), ("a", "y"), ("b", "y")])
    ok, witness = is_chain(chain)
    assert ok and witness == ("a", "b")
    crossing = bipartite(["a", "b"], ["x", "y"], [("a", "x"), ("b", "y")])
    assert is_chain(crossing) == (False, None)
    assert is_chordal(partition_completion(chain))
    assert not is_chordal(partition_completion(crossing))


def test_chain_fill_set_on_the_single_edge_gadget():
    b = build_ola_gadget(k2(), None)
    res = chain_fill_set(b, ("u", "v"))
    assert res.fill == frozenset({("u", "r:v#1")})
    assert res.sigma["r:v#1"] == 2
    # on the saturated gadget u is adjacent to everything already
    assert chain_fill_set(build_ola_gadget(k2(), "u"), ("u", "v")).fill == frozenset()


def test_chain_fill_set_rejects_isolated_q_vertices():
    b = bipartite(["a"], ["x", "y"], [("a", "x")])
    with pytest.raises(GraphError):
        chain_fill_set(b, ("a",))


def test_chain_fill_makes_a_chain():
    b = build_ola_gadget(paw_graph(), "c")
    alpha = ("c", "a", "b", "d")
    filled = b.with_fill(chain_fill_set(b, alpha).fill)
    ok, witness = is_chain(filled)
    assert ok
    assert is_chordal(partition_completion(filled))


def test_ola_cost():
    assert ola_cost(paw_graph(), ("d", "c", "a", "b")) == 5
    assert ola_cost(k2(), ("u", "v")) == 1


def test_linear_cut_value():
    assert linear_cut_value(path_graph(4), ("p1", "p2", "p3", "p4")) == 1
    assert linear_cut_value(complete_graph(4), tuple(complete_graph(4).vertices)) == 4


def test_elim_degree_sequence():
    assert elim_degree_sequence(paw_graph(), ("d", "a", "b", "c")) == (1, 2, 1, 0)
    assert elim_degree_sequence(path_graph(3), ("p1", "p2", "p3")) == (1, 1, 0)


def test_eval_lambda_and_omega():
    g = paw_graph()
    assert eval_lambda(g, "c", 7) == 7 + 12 - 8 + 3
    assert eval_omega(g, 2) == 4 * 5 + 2
    assert eval_omega(path_graph(3), 1) == 3 * 4 + 1


def test_eval_ki_delta():
    g = path_graph(3)
    alpha = ("p1", "p2", "p3")
    d_seq = elim_degree_sequence(g, alpha)
    res = eval_ki_delta(g, alpha, d_seq)
    assert res.delta_sum == sum(res.ki)
    assert res.delta_pow == sum(2 ** k for k in res.ki)
    with pytest.raises(GraphError):
        eval_ki_delta(g, alpha, (1, 1))


def test_pi_p_positions():
    g = path_graph(3)
    order = pi_p_from_alpha(g, ("p1", "p2", "p3"))
    # copies of the i-th vertex occupy positions (Delta+1)(i-1)+1..(Delta+1)i,
    # highest copy index first: u_i^j sits at (Delta+1)i - j + 1
    assert order.index("p2#1") + 1 == 6
    assert order.index("p2#2") + 1 == 5
    assert order.index("p2#3") + 1 == 4


def test_witness_kit_for_all_three_kinds():
    g = paw_graph()
    for builder in (build_ola_gadget, build_mcla_gadget, build_eds_gadget):
        b = builder(g, "c")
        kit = witness_kit(b)
        completed = partition_completion(b)
        assert kit.ordering[0].startswith("r:")
        assert verify_pek(completed, kit)


def test_witness_kit_needs_a_saturated_gadget():
    with pytest.raises(GraphError):
        witness_kit(build_ola_gadget(paw_graph(), None))

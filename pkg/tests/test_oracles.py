import pytest

from moraltri import (
    ResourceLimitError,
    brute_is_moral,
    brute_min_fill_orderings,
    brute_min_mcla,
    brute_min_ola,
    eds_feasible,
    is_moral,
    min_fill_exact,
)
from moraltri.instances import (
    complete_graph,
    cycle_graph,
    demo_moral_graph,
    path_graph,
    paw_graph,
)
from moraltri.oracles import _orderings


def test_brute_min_fill_examples():
    assert brute_min_fill_orderings(cycle_graph(4)) == 1
    assert brute_min_fill_orderings(demo_moral_graph()) == 1
    assert brute_min_fill_orderings(complete_graph(4)) == 0


def test_brute_is_moral_examples():
    assert not brute_is_moral(cycle_graph(4))
    assert brute_is_moral(demo_moral_graph())
    assert brute_is_moral(complete_graph(4))


def test_brute_min_ola():
    value, witness = brute_min_ola(path_graph(3))
    assert value == 2
    assert witness == ("p1", "p2", "p3")  # first optimum in lexicographic order
    assert brute_min_ola(complete_graph(3))[0] == 4


def test_brute_min_ola_restrictions():
    value, witness = brute_min_ola(path_graph(3), ("first", "p2"))
    assert witness[0] == "p2"
    assert value == 3
    value, witness = brute_min_ola(path_graph(3), ("last", "p2"))
    assert witness[-1] == "p2"
    assert value == 3


def test_brute_min_mcla():
    value, witness = brute_min_mcla(path_graph(4))
    assert value == 1
    assert brute_min_mcla(complete_graph(4))[0] == 4
    assert brute_min_mcla(paw_graph(), ("last", "d"))[0] == 2


def test_eds_feasible():
    g = paw_graph()
    assert eds_feasible(g, (1, 2, 1, 0)) == ("d", "a", "b", "c")
    assert eds_feasible(g, (3, 2, 1, 0)) is None
    assert eds_feasible(g, (1, 2, 1, 0), ("last", "c")) == ("d", "a", "b", "c")
    with pytest.raises(ValueError):
        eds_feasible(g, (1, 2))


def test_restricted_ordering_generator():
    g = path_graph(3)
    firsts = list(_orderings(g, ("first", "p2")))
    assert all(o[0] == "p2" for o in firsts) and len(firsts) == 2
    lasts = list(_orderings(g, ("last", "p2")))
    assert all(o[-1] == "p2" for o in lasts) and len(lasts) == 2


def test_caps():
    with pytest.raises(ResourceLimitError):
        brute_min_ola(path_graph(10))
    with pytest.raises(ResourceLimitError):
        brute_min_fill_orderings(path_graph(8))
    with pytest.raises(ResourceLimitError):
        brute_is_moral(path_graph(7))


def test_restriction_sweep_matches_unrestricted():
    # minimizing over the fixed-first vertex recovers the global optimum
    for g in (paw_graph(), cycle_graph(5), demo_moral_graph()):
        unrestricted = brute_min_ola(g)[0]
        swept = min(brute_min_ola(g, ("first", w))[0] for w in g.vertices)
        assert swept == unrestricted


def test_oracles_agree_with_solvers_on_small_graphs():
    for g in (cycle_graph(4), cycle_graph(5), paw_graph(), demo_moral_graph(),
              complete_graph(4), path_graph(5)):
        assert min_fill_exact(g).size == brute_min_fill_orderings(g)
        assert is_moral(g) == brute_is_moral(g)

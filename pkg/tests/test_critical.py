import pytest
from hypothesis import given

from kercore.critical import (
    FlowNetwork,
    critical_difference,
    critical_difference_bruteforce,
    critical_independence_difference_oracle,
    critical_independent_sets,
    diff,
    enumerate_critical_sets,
    ker,
    ker_oracle,
)
from kercore.errors import GuardExceeded
from kercore.fixtures import bull, tri_star
from kercore.graph import Graph
from kercore.independence import is_independent

from conftest import graphs


def test_diff_examples():
    assert diff(Graph.star(3), {1, 2, 3}) == 2
    fx = tri_star()
    assert diff(fx.graph, fx.ids("b", "c")) == 1
    assert diff(Graph.path(2), {0, 1}) == 0


def test_critical_difference_examples():
    assert critical_difference(Graph.complete(3))[0] == 0
    assert critical_difference(Graph.star(3))[0] == 2
    assert critical_difference(tri_star().graph)[0] == 1
    assert critical_difference(Graph(0)) == (0, frozenset())


def test_id_examples():
    assert critical_independence_difference_oracle(Graph.complete(3))[0] == 0
    assert critical_independence_difference_oracle(Graph.star(3)) == (2, frozenset({1, 2, 3}))
    assert critical_independence_difference_oracle(Graph.cycle(5))[0] == 0


def test_ker_examples():
    assert ker(Graph.complete(3)) == frozenset()
    assert ker(Graph.star(3)) == {1, 2, 3}
    fx = tri_star()
    assert ker(fx.graph) == fx.ids("b", "c")
    assert ker_oracle(fx.graph) == fx.ids("b", "c")


def test_critical_set_enumeration_examples():
    assert frozenset() in enumerate_critical_sets(Graph.complete(3))
    assert all({1, 2, 3} <= X for X in enumerate_critical_sets(Graph.star(3)))
    fx = bull()
    triangle = fx.ids("t1", "t2", "t3")
    assert any(X & triangle for X in enumerate_critical_sets(fx.graph))
    assert any(X & triangle for X in critical_independent_sets(fx.graph))


def test_scan_guards():
    with pytest.raises(GuardExceeded):
        critical_difference_bruteforce(Graph(21), limit=20)
    with pytest.raises(GuardExceeded):
        enumerate_critical_sets(Graph(17), limit=16)


def test_flow_network_small():
    net = FlowNetwork(4)
    net.add_edge(0, 1, 3)
    net.add_edge(0, 2, 2)
    net.add_edge(1, 2, 1)
    net.add_edge(1, 3, 2)
    net.add_edge(2, 3, 3)
    assert net.max_flow(0, 3) == 5
    assert net.reachable(0) == {0}


@given(graphs(max_n=12))
def test_flow_matches_subset_scan(G):
    d, witness = critical_difference(G)
    assert d == critical_difference_bruteforce(G)[0]
    assert diff(G, witness) == d


@given(graphs(max_n=12))
def test_zhang_equality(G):
    assert critical_difference(G)[0] == critical_independence_difference_oracle(G)[0]


@given(graphs(max_n=11))
def test_ker_is_the_minimal_critical_set(G):
    k = ker(G)
    crit = enumerate_critical_sets(G)
    assert k == frozenset.intersection(*crit)
    assert k in crit
    assert is_independent(G, k)
    assert critical_difference(G)[1] == k


@given(graphs(max_n=10))
def test_critical_sets_closed_under_union_and_intersection(G):
    crit = set(enumerate_critical_sets(G))
    for A in crit:
        for B in crit:
            assert A | B in crit and A & B in crit

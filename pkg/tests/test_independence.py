import pytest
from hypothesis import given

from kercore.errors import GraphClassError, GuardExceeded
from kercore.fixtures import bull, tri_star
from kercore.graph import Graph
from kercore.independence import (
    alpha_almost_bipartite,
    alpha_bipartite,
    alpha_critical_edges,
    alpha_oracle,
    core_corona_bipartite,
    core_corona_deletion,
    core_corona_fast_ab,
    core_corona_oracle,
    enumerate_omega,
    independence_number,
    is_independent,
    is_ke,
    max_independent_set,
    mis_bipartite,
    trace,
)
from kercore.randgen import GenSpec, gen_non_ke_almost_bipartite, split_seed
from kercore.structure import almost_bipartite

from conftest import bipartite_graphs, brute_alpha, graphs


def test_alpha_bipartite_examples():
    assert alpha_bipartite(Graph.star(3)) == 3
    assert alpha_bipartite(Graph.path(2)) == 1
    assert alpha_bipartite(Graph.path(4)) == 2
    with pytest.raises(GraphClassError):
        alpha_bipartite(Graph.cycle(5))


def test_alpha_almost_bipartite_examples():
    assert alpha_almost_bipartite(Graph.complete(3), almost_bipartite(Graph.complete(3))[0])[0] == 1
    assert alpha_almost_bipartite(Graph.cycle(5), almost_bipartite(Graph.cycle(5))[0])[0] == 2
    fx = tri_star()
    alpha, S = alpha_almost_bipartite(fx.graph, almost_bipartite(fx.graph)[0])
    assert alpha == 3 and is_independent(fx.graph, S)


def test_omega_examples():
    assert enumerate_omega(Graph.complete(3)) == [{0}, {1}, {2}]
    fx = tri_star()
    expected = sorted((fx.ids(y, "b", "c") for y in ("y1", "y2", "y3")), key=sorted)
    assert enumerate_omega(fx.graph) == expected
    omega = enumerate_omega(Graph.cycle(5))
    assert len(omega) == 5 and all(len(S) == 2 for S in omega)
    assert enumerate_omega(Graph(0)) == [frozenset()]


def test_core_corona_examples():
    p = core_corona_oracle(Graph.complete(3))
    assert p.core == frozenset() and p.corona == {0, 1, 2}
    fx = tri_star()
    for prof in (core_corona_oracle(fx.graph), core_corona_deletion(fx.graph), core_corona_fast_ab(fx.graph, almost_bipartite(fx.graph)[0])):
        assert prof.core == fx.ids("b", "c")
        assert prof.corona == fx.ids("y1", "y2", "y3", "b", "c")
    star = Graph.star(3)
    assert core_corona_oracle(star).core == core_corona_oracle(star).corona == {1, 2, 3}
    assert core_corona_bipartite(star).core == {1, 2, 3}
    assert core_corona_bipartite(Graph.path(4)).core == frozenset()
    edge = core_corona_bipartite(Graph.path(2))
    assert edge.core == frozenset() and edge.corona == {0, 1}
    for G in (Graph.cycle(5), Graph.complete(3)):
        prof = core_corona_fast_ab(G, almost_bipartite(G)[0])
        assert prof.core == frozenset() and prof.corona == frozenset(range(G.n))


def test_fast_ab_refuses_ke_graphs():
    G = bull().graph
    with pytest.raises(GraphClassError):
        core_corona_fast_ab(G, almost_bipartite(G)[0])


def test_is_ke_examples():
    assert is_ke(Graph.complete(3)) == (False, 1, 1)
    assert is_ke(bull().graph) == (True, 3, 2)
    assert is_ke(Graph.star(4)).ke


@given(bipartite_graphs())
def test_bipartite_graphs_are_ke(G):
    assert is_ke(G).ke
    S = mis_bipartite(G)
    assert is_independent(G, S) and len(S) == alpha_bipartite(G)


def test_alpha_critical_examples():
    assert alpha_critical_edges(Graph.complete(3)) == {(0, 1), (1, 2), (0, 2)}
    assert alpha_critical_edges(Graph.path(2)) == {(0, 1)}
    fx = tri_star()
    triangle = {(0, 1), (1, 2), (0, 2)}
    assert triangle <= alpha_critical_edges(fx.graph)


def test_trace_examples():
    omega = enumerate_omega(Graph.complete(3))
    assert trace(omega, {0}) == [frozenset(), frozenset({0})]
    assert trace(omega, set()) == [frozenset()]


def test_oracle_guard():
    with pytest.raises(GuardExceeded):
        alpha_oracle(Graph(30), limit=24)
    with pytest.raises(GuardExceeded):
        enumerate_omega(Graph(30), limit=24)


@given(graphs(max_n=11))
def test_alpha_matches_brute_force(G):
    alpha = brute_alpha(G)
    assert alpha_oracle(G)[0] == alpha
    S = max_independent_set(G)
    assert is_independent(G, S) and len(S) == alpha
    omega = enumerate_omega(G)
    assert all(len(T) == alpha and is_independent(G, T) for T in omega)
    assert len(set(omega)) == len(omega)


@given(graphs(max_n=8))
def test_omega_is_complete(G):
    alpha = brute_alpha(G)
    every = [
        frozenset(v for v in range(G.n) if mask >> v & 1)
        for mask in range(1 << G.n)
        if mask.bit_count() == alpha and all(not (G.masks[v] & mask) for v in range(G.n) if mask >> v & 1)
    ]
    assert enumerate_omega(G) == sorted(every, key=sorted)


@given(graphs(max_n=11))
def test_core_corona_routes_agree(G):
    oracle = core_corona_oracle(G)
    deletion = core_corona_deletion(G, limit=24)
    assert (deletion.alpha, deletion.core, deletion.corona) == (oracle.alpha, oracle.core, oracle.corona)


@given(bipartite_graphs())
def test_bipartite_core_corona_matches_oracle(G):
    fast, oracle = core_corona_bipartite(G), core_corona_oracle(G)
    assert (fast.core, fast.corona) == (oracle.core, oracle.corona)


def test_fast_ab_matches_oracle_on_generated_graphs():
    for i in range(150):
        G, cyc, dec = gen_non_ke_almost_bipartite(GenSpec(max_n=16, seed=split_seed(7, i)))
        fast, oracle = core_corona_fast_ab(G, cyc, dec), core_corona_oracle(G)
        assert (fast.alpha, fast.core, fast.corona) == (oracle.alpha, oracle.core, oracle.corona)

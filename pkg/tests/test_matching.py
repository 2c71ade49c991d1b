import itertools

import networkx as nx
import pytest
from hypothesis import given

from kercore.errors import GraphClassError, GuardExceeded
from kercore.fixtures import k4, tri_star
from kercore.graph import Graph
from kercore.matching import (
    enumerate_maximum_matchings,
    is_matching,
    max_matching_bipartite,
    maximum_matching,
    mu_almost_bipartite,
    mu_exact,
)
from kercore.structure import almost_bipartite

from conftest import bipartite_graphs, graphs


def nx_mu(G: Graph) -> int:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edge_list)
    return len(nx.max_weight_matching(H, maxcardinality=True))


def brute_matchings(G: Graph):
    edges = G.edge_list
    best, found = 0, []
    for r in range(len(edges), -1, -1):
        for sub in itertools.combinations(edges, r):
            if is_matching(G, sub):
                found.append(frozenset(sub))
        if found:
            return sorted(found, key=sorted)
    return [frozenset()]


def test_bipartite_examples():
    assert max_matching_bipartite(Graph.path(3)).size == 1
    assert max_matching_bipartite(Graph(8, [(0, 1), (2, 3), (4, 5), (6, 7)])).size == 4
    fx = tri_star()
    H = Graph(fx.graph.n, [e for e in fx.graph.edge_list if fx.labels["y1"] not in e])
    assert max_matching_bipartite(H).size == 2
    with pytest.raises(GraphClassError):
        max_matching_bipartite(Graph.complete(3))


def test_almost_bipartite_examples():
    for G, mu in [(Graph.complete(3), 1), (Graph.cycle(5), 2), (tri_star().graph, 2)]:
        cyc, _ = almost_bipartite(G)
        M = mu_almost_bipartite(G, cyc)
        assert M.size == mu and is_matching(G, M.edges)
    assert mu_exact(k4().graph).size == 2
    assert mu_exact(Graph.complete(3)).size == 1
    assert mu_exact(tri_star().graph).size == 2


def test_enumeration_examples():
    assert len(enumerate_maximum_matchings(Graph.complete(3))) == 3
    assert len(enumerate_maximum_matchings(Graph.path(3))) == 2
    fx = tri_star()
    triangle = {(0, 1), (1, 2), (0, 2)}
    all_m = enumerate_maximum_matchings(fx.graph)
    assert all(M & triangle for M in all_m)
    assert frozenset({(1, 2), (0, 3)}) in all_m


def test_guard():
    with pytest.raises(GuardExceeded):
        mu_exact(Graph.complete(9), limit=32)
    with pytest.raises(GuardExceeded):
        enumerate_maximum_matchings(Graph.complete(9), limit=32)


@given(bipartite_graphs())
def test_bipartite_matches_networkx(G):
    M = max_matching_bipartite(G)
    assert is_matching(G, M.edges)
    assert M.size == nx_mu(G)


@given(graphs(max_n=11))
def test_dispatcher_matches_networkx(G):
    M = maximum_matching(G, limit=60)
    assert is_matching(G, M.edges)
    assert M.size == nx_mu(G)


@given(graphs(max_n=7))
def test_enumeration_matches_brute_force(G):
    if G.m > 14:
        return
    assert enumerate_maximum_matchings(G) == brute_matchings(G)
    assert mu_exact(G).edges == min(brute_matchings(G), key=sorted)

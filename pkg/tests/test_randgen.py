import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kercore.errors import GenerationError
from kercore.fixtures import tri_star
from kercore.graph import Graph, is_connected
from kercore.independence import core_corona_bipartite, is_ke
from kercore.randgen import (
    Gadget,
    GenSpec,
    assemble,
    gen_almost_bipartite,
    gen_bipartite,
    gen_mixed,
    gen_non_ke_almost_bipartite,
    path_gadget,
    random_bipartite_gadget,
    split_seed,
    star_gadget,
)
from kercore.structure import almost_bipartite, is_bipartite

seeds = st.integers(0, 2**64 - 1)


def test_all_singletons_give_the_bare_cycle():
    G, cyc, dec = gen_almost_bipartite(GenSpec(cycle_len=3, gadgets=("singleton",)))
    assert G == Graph.complete(3)
    G, _, _ = gen_non_ke_almost_bipartite(GenSpec(cycle_len=5, gadgets=("singleton",), shuffle=False))
    assert G == Graph.cycle(5)
    assert not is_ke(G).ke


def test_tri_star_from_gadgets():
    out = assemble(3, [star_gadget(3, "leaf"), Gadget(1), Gadget(1)])
    assert out.graph == tri_star().graph
    assert out.decomposition.n1 == {3}
    assert is_ke(out.graph) == (False, 3, 2)


def test_gadget_shapes():
    g = path_gadget(3, 0)
    assert g.edges == ((0, 1), (1, 2))
    assert 0 in core_corona_bipartite(Graph(g.size, g.edges)).core
    s = star_gadget(3, "leaf")
    assert 0 in core_corona_bipartite(Graph(s.size, s.edges)).core
    c = star_gadget(3, "center")
    assert 0 not in core_corona_bipartite(Graph(c.size, c.edges)).core
    r = random_bipartite_gadget(6, 0.5, random.Random(1))
    H = Graph(r.size, r.edges)
    assert is_bipartite(H) and is_connected(H)


@given(seeds)
def test_generated_certificates_match_recognition(seed):
    G, cyc, dec = gen_almost_bipartite(GenSpec(max_n=20, seed=seed))
    assert is_connected(G)
    assert G.n <= 20
    assert almost_bipartite(G) == (cyc, dec)


@given(seeds)
def test_determinism(seed):
    spec = GenSpec(max_n=18, seed=seed, force_non_ke=True)
    assert gen_almost_bipartite(spec) == gen_almost_bipartite(spec)


@given(seeds, st.integers(8, 24))
def test_max_m_respected(seed, max_n):
    G, _, _ = gen_almost_bipartite(GenSpec(max_n=max_n, max_m=max_n + 2, edge_density=0.8, seed=seed))
    assert G.n <= max_n and G.m <= max_n + 2


def test_non_ke_batch():
    for i in range(1000):
        G, _, _ = gen_non_ke_almost_bipartite(GenSpec(max_n=16, seed=split_seed(3, i)))
        v = is_ke(G)
        assert v.alpha + v.mu == G.n - 1


def test_spec_validation():
    with pytest.raises(ValueError, match="odd"):
        gen_almost_bipartite(GenSpec(cycle_len=4))
    with pytest.raises(ValueError):
        GenSpec(edge_density=1.5).validate()
    with pytest.raises(ValueError):
        GenSpec(min_size=0).validate()
    with pytest.raises(ValueError):
        GenSpec(gadgets=("blob",)).validate()
    spec = GenSpec(cycle_len=7, max_n=30, seed=9)
    assert GenSpec.from_dict(spec.to_dict()) == spec


def test_assemble_needs_one_gadget_per_vertex():
    with pytest.raises(ValueError):
        assemble(3, [Gadget(1)])


def test_rejection_budget_reported():
    # one-edge random gadgets never keep the root in the core; with the only
    # allowed size equal to 2 the sampler falls back to a singleton instead
    G, _, _ = gen_non_ke_almost_bipartite(GenSpec(cycle_len=3, gadgets=("random",), max_size=2))
    assert G == Graph.complete(3)
    assert issubclass(GenerationError, RuntimeError)


def test_gen_bipartite_examples():
    star = gen_bipartite(1, 4, 1.0, seed=0)
    assert star == Graph.star(4)
    assert gen_bipartite(0, 0, 0.5, seed=0) == Graph(0)
    assert gen_bipartite(3, 4, 0.0, seed=0).m == 0
    assert is_bipartite(gen_bipartite(5, 5, 0.5, seed=3))


def test_split_seed_streams_differ():
    assert len({split_seed(42, i) for i in range(1000)}) == 1000
    assert split_seed(42, 7) == split_seed(42, 7)


def test_gen_mixed_deterministic():
    assert [gen_mixed(s, 14) for s in range(20)] == [gen_mixed(s, 14) for s in range(20)]
    assert all(gen_mixed(s, 14).n <= 14 for s in range(200))

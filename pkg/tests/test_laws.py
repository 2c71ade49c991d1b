import pytest

from kercore.facts import Facts
from kercore.fixtures import bull, c5, fig5, fig9, k3, tri_star
from kercore.graph import Graph
from kercore.laws import LAWS, PROVED_LAWS, check, check_all, replay, reproduce, search_counterexample
from kercore.randgen import GenSpec, gen_mixed


def test_registry_complete():
    assert list(LAWS) == [
        "TH3_I", "TH3_II", "TH1_I", "TH1_II", "LEM0", "LEM2", "TH2_I", "TH2_II", "TH2_III", "PROP44",
        "COR3", "LEM9", "PROP2", "LEM8", "LEM5", "TH3322", "TH333", "TH44", "TH5", "COR_CORE1", "CONJ1",
    ]
    assert "CONJ1" not in PROVED_LAWS


def test_tri_star_examples():
    fx = tri_star()
    r = check(fx.graph, "TH3322")
    assert r.passed and r.metrics["ker"] == fx.ids("b", "c") == r.metrics["core"]
    r = check(fx.graph, "TH5")
    assert r.passed and (r.metrics["corona_size"], r.metrics["core_size"], r.metrics["alpha"]) == (5, 2, 3)
    results = check_all(fx.graph)
    assert all(res.passed for res in results if res.applicable)
    assert {res.law_id for res in results if not res.applicable} == {"TH1_I", "TH1_II", "LEM0"}
    r = check(fx.graph, "CONJ1")
    assert r.passed and r.metrics["min_cycle_edges"] == r.metrics["max_cycle_edges"] == 1


def test_fig5_strict_inclusion():
    fx = fig5()
    r = check(fx.graph, "TH3_I")
    assert r.passed
    assert r.metrics["ker"] == fx.ids("a", "b") < r.metrics["core"] == fx.ids("a", "b", "c")


def test_small_examples():
    assert check(k3().graph, "COR_CORE1").passed
    assert check(k3().graph, "CONJ1").passed
    assert check(c5().graph, "TH5").passed


def test_bull_applicability():
    results = {r.law_id: r for r in check_all(bull().graph)}
    assert results["TH1_I"].applicable and results["TH1_I"].passed
    assert results["TH1_II"].applicable and results["TH1_II"].passed
    assert not results["TH3322"].applicable and results["TH3322"].verdict == "skipped"
    assert "Konig-Egervary" in results["TH3322"].reason


def test_fig9_th333_not_applicable_but_fails_when_forced():
    fx = fig9()
    r = check(fx.graph, "TH333")
    assert not r.applicable and r.verdict == "skipped"
    forced = check(fx.graph, "TH333", enforce_hypotheses=False)
    assert forced.failed and forced.witness["uncovered"] == fx.ids("a")


def test_failures_carry_witnesses_and_replay():
    fx = fig5()
    r = check(fx.graph, "TH3_II", enforce_hypotheses=False)
    assert r.failed and r.witness["difference"] == fx.ids("c")
    assert replay(fx.graph, r)
    assert replay(fx.graph, check(fx.graph, "TH3_I"))


def test_guarded_ingredients_skip():
    G = Graph.complete(26)
    r = check(G, "TH3_I")
    assert r.verdict == "skipped" and r.guard_skipped


def test_unknown_law():
    with pytest.raises(KeyError):
        check(k3().graph, "NOPE")
    with pytest.raises(KeyError):
        check_all(k3().graph, ["NOPE"])


def test_shared_facts_cache():
    f = Facts(tri_star().graph)
    check_all(f)
    assert "_core_corona" in f.__dict__ and "ker" in f.__dict__


def test_general_laws_on_mixed_graphs():
    for seed in range(150):
        f = Facts(gen_mixed(seed, 12))
        for law in ("TH3_I", "TH3_II", "TH1_I", "TH1_II", "LEM0", "TH44"):
            r = check(f, law)
            assert r.verdict != "fail", (seed, r)


def test_search_singleton_cycle_has_no_counterexample():
    spec = GenSpec(cycle_len=3, gadgets=("singleton",))
    rep = search_counterexample("CONJ1", spec, trials=5, seed=1)
    assert not rep.found and rep.applicable == 5
    assert rep.instances[0]["n"] == 3


def test_search_is_deterministic_across_workers():
    spec = GenSpec(max_n=14)
    a = search_counterexample("CONJ1", spec, trials=40, seed=42)
    b = search_counterexample("CONJ1", spec, trials=40, seed=42, workers=2)
    assert a.to_dict(timing=False) == b.to_dict(timing=False)
    assert all("min_cycle_edges" in rec and "max_cycle_edges" in rec for rec in a.instances)
    assert "no counterexample" in a.summary()


def test_search_prop2():
    rep = search_counterexample("PROP2", GenSpec(max_n=16), trials=300, seed=5)
    assert not rep.found and rep.applicable == 300


def test_reproduce_matches_search_record():
    spec = GenSpec(max_n=14)
    rep = search_counterexample("TH5", spec, trials=3, seed=9)
    for rec in rep.instances:
        res = reproduce("TH5", spec, rec["seed"])
        assert res.verdict == rec["verdict"]


def test_search_rejects_bad_spec():
    with pytest.raises(ValueError):
        search_counterexample("CONJ1", GenSpec(cycle_len=6), trials=1, seed=0)

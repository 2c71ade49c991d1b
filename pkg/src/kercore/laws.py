"""Executable statements about ker, core, corona, matchings and critical sets.

Each law has a hypothesis (the graph class it is stated for) and a predicate.
``check`` reports ``applicable=False`` instead of a vacuous pass when the
hypothesis fails. With ``enforce_hypotheses=False`` the predicate is
evaluated anyway, which is how out-of-class graphs are shown to violate an
identity.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable

from .errors import GenerationError, GuardExceeded, InternalInconsistency
from .facts import Facts
from .graph import Graph, closed_neighborhood, delete_edges, induced_subgraph
from .independence import enumerate_omega, independence_number, trace
from .matching import maximum_matching
from .randgen import GenSpec, gen_almost_bipartite, gen_non_ke_almost_bipartite, split_seed
from .critical import diff


class NotEvaluable(Exception):
    """The predicate needs structure the graph lacks (e.g. a unique odd cycle)."""


GUARD_PREFIXES = ("guard exceeded", "hypothesis undecidable within guards")


@dataclass
class LawResult:
    law_id: str
    applicable: bool
    verdict: str  # "pass" | "fail" | "skipped"
    witness: dict = field(default_factory=dict)
    metrics: dict = field(default_factory=dict)
    reason: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    @property
    def failed(self) -> bool:
        return self.verdict == "fail"

    @property
    def guard_skipped(self) -> bool:
        return self.verdict == "skipped" and self.reason.startswith(GUARD_PREFIXES)

    def to_dict(self) -> dict:
        return {
            "law": self.law_id,
            "applicable": self.applicable,
            "verdict": self.verdict,
            "witness": _jsonable(self.witness),
            "metrics": _jsonable(self.metrics),
            "reason": self.reason,
        }


def _jsonable(x):
    if isinstance(x, (set, frozenset)):
        items = [_jsonable(v) for v in x]
        return sorted(items)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass(frozen=True)
class Law:
    id: str
    statement: str
    hypothesis: Callable[[Facts], tuple[bool, str]]
    predicate: Callable[[Facts], tuple[bool, dict, dict]]
    needs_non_ke: bool = False


# -- hypotheses ----------------------------------------------------------------


def _any(f: Facts):
    return True, ""


def _bipartite(f: Facts):
    return f.bipartite, "graph is not bipartite"


def _bipartite_or_unicyclic_non_ke(f: Facts):
    if f.bipartite:
        return True, ""
    if not f.unicyclic:
        return False, "graph is neither bipartite nor unicyclic"
    return not f.ke, "unicyclic graph is Konig-Egervary"


def _ke(f: Facts):
    return f.ke, "graph is not Konig-Egervary"


def _connected_ab(f: Facts):
    if not f.connected:
        return False, "graph is not connected"
    return f.connected_almost_bipartite, "graph is not almost bipartite"


def _connected_ab_non_ke(f: Facts):
    ok, why = _connected_ab(f)
    if not ok:
        return ok, why
    return not f.ke, "graph is Konig-Egervary"


# -- helpers -------------------------------------------------------------------------


def _need_cycle(f: Facts):
    if not f.connected_almost_bipartite:
        raise NotEvaluable("predicate needs a connected graph with a unique odd cycle")
    return f.cycle, f.decomposition


def _union(sets) -> frozenset[int]:
    return frozenset().union(*sets)


def _half(f: Facts) -> int:
    return f.cycle.length // 2


# -- predicates ------------------------------------------------------------------------


def _th3_i(f: Facts):
    extra = f.ker - f.core
    return not extra, {"ker": f.ker, "core": f.core}, {"ker_minus_core": extra}


def _ker_equals_core(f: Facts):
    ok = f.ker == f.core
    return ok, {"ker": f.ker, "core": f.core}, {} if ok else {"ker": f.ker, "core": f.core, "difference": f.ker ^ f.core}


def _covering(f: Facts):
    uncovered = frozenset(range(f.graph.n)) - (f.corona | f.neighborhood(f.core))
    return not uncovered, {"corona": f.corona, "core": f.core}, {"uncovered": uncovered}


def _th1_ii(f: Facts):
    total = len(f.core) + len(f.corona)
    ok = total == 2 * f.alpha
    return ok, {"core_size": len(f.core), "corona_size": len(f.corona), "alpha": f.alpha}, {} if ok else {
        "sum": total,
        "two_alpha": 2 * f.alpha,
    }


def _lem0(f: Facts):
    G = f.graph
    if G.m <= f.matching_limit:
        everything = frozenset(range(G.n))
        unsaturated = _union(everything - {v for e in M for v in e} for M in f.max_matchings)
        method = "enumeration"
    else:
        mu = f.mu
        unsaturated = frozenset(
            v for v in range(G.n) if maximum_matching(induced_subgraph(G, set(range(G.n)) - {v})[0]).size == mu
        )
        method = "deletion"
    bad = f.core ^ unsaturated
    return not bad, {"core": f.core, "avoidable_by_some_maximum_matching": unsaturated, "method": method}, {
        "vertices": bad
    }


def _lem2(f: Facts):
    cycle, _ = _need_cycle(f)
    G, n = f.graph, f.graph.n
    total = f.alpha + f.mu
    critical = frozenset(e for e in cycle.edges if independence_number(delete_edges(G, [e]), f.mis_limit) > f.alpha)
    part_i = n - 1 <= total <= n
    part_ii = (total == n - 1) == (critical == cycle.edges)
    metrics = {"alpha": f.alpha, "mu": f.mu, "n": n, "critical_cycle_edges": critical, "cycle_edges": cycle.edges}
    witness = {} if part_i and part_ii else {"alpha_plus_mu": total, "critical_cycle_edges": critical}
    return part_i and part_ii, metrics, witness


def _th2_i(f: Facts):
    cycle, _ = _need_cycle(f)
    hit = f.core & closed_neighborhood(f.graph, cycle.vertex_set)
    return not hit, {"core": f.core}, {"core_meets_closed_cycle_neighborhood": hit}


def _th2_ii(f: Facts):
    _need_cycle(f)
    parts = _union(p.core for p in f.part_profiles.values())
    ok = parts == f.core
    return ok, {"core": f.core, "union_of_part_cores": parts}, {} if ok else {"core": f.core, "union": parts}


def _th2_iii(f: Facts):
    _need_cycle(f)
    omega = f.omega
    bad = {}
    for y, (H, order) in f.parts.items():
        part_omega = sorted((frozenset(order[v] for v in S) for S in enumerate_omega(H, f.mis_limit)), key=sorted)
        traced = trace(omega, order)
        if traced != part_omega:
            bad[y] = {"trace": traced, "part_omega": part_omega}
    return not bad, {"omega_count": len(omega)}, {"parts": bad}


def _prop44(f: Facts):
    cycle, dec = _need_cycle(f)
    G = f.graph
    roots_in_core = all(y in f.whole_part_profiles[y].core for y in cycle.vertices)
    avoid = f.alpha_of(set(range(G.n)) - dec.n1) == f.alpha
    if G.n <= f.mis_limit:
        by_enum = any(not (S & dec.n1) for S in f.omega)
        if by_enum != avoid:
            raise InternalInconsistency("MIS avoiding N1(C): routes disagree", {"deletion": avoid, "enumeration": by_enum})
    non_ke = f.alpha + f.mu == G.n - 1
    ok = roots_in_core == avoid == non_ke
    metrics = {"roots_in_part_cores": roots_in_core, "mis_avoiding_n1": avoid, "alpha_plus_mu_is_n_minus_1": non_ke}
    return ok, metrics, {} if ok else dict(metrics)


def _best_with_cycle_pattern(f: Facts):
    """Largest independent set whose trace on C is a maximum independent set of C.

    Returns (size, chosen cycle vertices) maximizing over the 2k+1 independent
    k-subsets of C = C_{2k+1}; parts are optimized independently because no
    edges join different parts outside E(C).
    """
    cycle, dec = f.cycle, f.decomposition
    vs = cycle.vertices
    L = len(vs)
    k = L // 2
    with_root = {}
    without_root = {}
    for y in vs:
        part = dec.parts[y]
        without_root[y] = f.alpha_of(part - {y})
        with_root[y] = 1 + f.alpha_of(part - closed_neighborhood(f.graph, [y]))
    best = (-1, ())
    for s in range(L):
        chosen = tuple(sorted(vs[(s + 2 * i) % L] for i in range(k)))
        size = sum(with_root[y] if y in chosen else without_root[y] for y in vs)
        best = max(best, (size, chosen), key=lambda t: t[0])
    return best


def _cor3(f: Facts):
    cycle, _ = _need_cycle(f)
    k = _half(f)
    size, chosen = _best_with_cycle_pattern(f)
    ok = size == f.alpha
    if f.graph.n <= f.mis_limit:
        by_enum = any(len(S & cycle.vertex_set) == k for S in f.omega)
        if by_enum != ok:
            raise InternalInconsistency("COR3 routes disagree", {"construction": ok, "enumeration": by_enum})
    metrics = {"alpha": f.alpha, "best_with_half_cycle": size, "cycle_pattern": chosen}
    return ok, metrics, {} if ok else {"alpha": f.alpha, "best_with_half_cycle": size}


def _lem9(f: Facts):
    cycle, _ = _need_cycle(f)
    total = sum(f.whole_part_profiles[y].alpha for y in cycle.vertices)
    rhs = total - _half(f) - 1
    ok = rhs == f.alpha
    return ok, {"alpha": f.alpha, "sum_part_alpha": total, "rhs": rhs}, {} if ok else {"alpha": f.alpha, "rhs": rhs}


def _prop2(f: Facts):
    cycle, _ = _need_cycle(f)
    G = f.graph
    off_cycle = maximum_matching(delete_edges(G, cycle.edges), f.matching_limit)
    ok = off_cycle.size < f.mu
    metrics = {"mu": f.mu, "mu_without_cycle_edges": off_cycle.size}
    witness = {} if ok else {"matching": off_cycle.edges}
    if G.m <= f.matching_limit:
        avoiding = [M for M in f.max_matchings if not (M & cycle.edges)]
        if (not avoiding) != ok:
            raise InternalInconsistency("PROP2 routes disagree", {"deletion": ok, "enumeration": not avoiding})
        metrics["maximum_matchings"] = len(f.max_matchings)
        if avoiding:
            witness = {"matching": avoiding[0]}
    return ok, metrics, witness


def _lem8(f: Facts):
    cycle, _ = _need_cycle(f)
    G = f.graph
    core_critical = diff(G, f.core) == f.d
    metrics = {"d": f.d, "diff_core": diff(G, f.core)}
    witness = {}
    part_i = True
    if G.n <= f.scan_limit:
        meeting = [A for A in f.critical_independent_sets if A & cycle.vertex_set]
        part_i = not meeting
        metrics["critical_independent_sets"] = len(f.critical_independent_sets)
        if meeting:
            witness["critical_independent_set_meeting_cycle"] = meeting[0]
    else:
        metrics["part_i"] = f"skipped: n > {f.scan_limit}"
    if not core_critical:
        witness["core_not_critical"] = {"diff_core": diff(G, f.core), "d": f.d}
    return part_i and core_critical, metrics, witness


def _lem5(f: Facts):
    cycle, dec = _need_cycle(f)
    hits = {y: p.core & dec.n1 for y, p in f.part_profiles.items() if p.core & dec.n1}
    antecedent = bool(hits)
    ok = not antecedent or f.ke
    return ok, {"antecedent": antecedent, "ke": f.ke}, {} if ok else {"n1_vertices_in_part_cores": hits}


def _th3322(f: Facts):
    _need_cycle(f)
    kers = _union(f.part_kers.values())
    cores = _union(p.core for p in f.part_profiles.values())
    ok = f.ker == kers == cores == f.core
    metrics = {"ker": f.ker, "union_part_kers": kers, "union_part_cores": cores, "core": f.core}
    return ok, metrics, {} if ok else dict(metrics)


def _th333(f: Facts):
    ok_i, metrics, witness = _covering(f)
    if not f.connected_almost_bipartite:
        metrics["part_ii"] = "skipped: no unique odd cycle"
        return ok_i, metrics, witness
    expected = f.cycle.vertex_set | _union(p.corona for p in f.part_profiles.values())
    ok_ii = expected == f.corona
    if not ok_ii:
        witness["corona"] = f.corona
        witness["cycle_plus_part_coronas"] = expected
    return ok_i and ok_ii, metrics, witness


def _th44(f: Facts):
    by_core = len(f.core) - len(f.neighborhood(f.core))
    ok = f.d == f.alpha - f.mu == by_core
    metrics = {"d": f.d, "alpha_minus_mu": f.alpha - f.mu, "core_difference": by_core}
    return ok, metrics, {} if ok else dict(metrics)


def _th5(f: Facts):
    total = len(f.core) + len(f.corona)
    ok = total == 2 * f.alpha + 1
    metrics = {"core_size": len(f.core), "corona_size": len(f.corona), "alpha": f.alpha}
    return ok, metrics, {} if ok else {"sum": total, "two_alpha_plus_one": 2 * f.alpha + 1}


def _cor_core1(f: Facts):
    ok = len(f.core) != 1
    return ok, {"core_size": len(f.core)}, {} if ok else {"core": f.core}


def _conj1(f: Facts):
    cycle, _ = _need_cycle(f)
    k = _half(f)
    counts = [len(M & cycle.edges) for M in f.max_matchings]
    bad = [M for M, c in zip(f.max_matchings, counts) if c != k]
    metrics = {
        "target": k,
        "min_cycle_edges": min(counts),
        "max_cycle_edges": max(counts),
        "maximum_matchings": len(counts),
    }
    return not bad, metrics, {} if not bad else {"matching": bad[0], "cycle_edges_used": len(bad[0] & cycle.edges)}


LAWS: dict[str, Law] = {
    law.id: law
    for law in [
        Law("TH3_I", "ker(G) is contained in core(G)", _any, _th3_i),
        Law("TH3_II", "ker(G) = core(G) for bipartite or unicyclic non-KE graphs", _bipartite_or_unicyclic_non_ke, _ker_equals_core),
        Law("TH1_I", "KE graphs: corona(G) and N(core(G)) cover V", _ke, _covering),
        Law("TH1_II", "KE graphs: |core| + |corona| = 2 alpha", _ke, _th1_ii),
        Law("LEM0", "bipartite: v in core iff some maximum matching misses v", _bipartite, _lem0),
        Law("LEM2", "almost bipartite: n-1 <= alpha+mu <= n, with n-1 iff every cycle edge is alpha-critical", _connected_ab, _lem2),
        Law("TH2_I", "core(G) avoids N[V(C)]", _connected_ab_non_ke, _th2_i, True),
        Law("TH2_II", "core(G) is the union of core(D_y - y)", _connected_ab_non_ke, _th2_ii, True),
        Law("TH2_III", "Omega(G) traced on D_y - y equals Omega(D_y - y)", _connected_ab_non_ke, _th2_iii, True),
        Law("PROP44", "roots in part cores <=> some MIS avoids N1(C) <=> alpha+mu = n-1", _connected_ab, _prop44),
        Law("COR3", "some MIS meets C in floor(|C|/2) vertices", _connected_ab_non_ke, _cor3, True),
        Law("LEM9", "alpha = sum alpha(D_y) - floor(|C|/2) - 1", _connected_ab_non_ke, _lem9, True),
        Law("PROP2", "every maximum matching uses an edge of C", _connected_ab_non_ke, _prop2, True),
        Law("LEM8", "critical independent sets avoid V(C); core(G) is critical", _connected_ab_non_ke, _lem8, True),
        Law("LEM5", "some N1(C) vertex in a part core implies KE", _connected_ab, _lem5),
        Law("TH3322", "ker(G) = U ker(D_y - y) = U core(D_y - y) = core(G)", _connected_ab_non_ke, _th3322, True),
        Law("TH333", "corona(G) and N(core(G)) cover V; corona(G) = V(C) U corona(D_y - y)", _connected_ab_non_ke, _th333, True),
        Law("TH44", "d(G) = alpha - mu = |core| - |N(core)|", _connected_ab_non_ke, _th44, True),
        Law("TH5", "|corona| + |core| = 2 alpha + 1", _connected_ab_non_ke, _th5, True),
        Law("COR_CORE1", "|core(G)| != 1", _connected_ab_non_ke, _cor_core1, True),
        Law("CONJ1", "every maximum matching uses exactly floor(|C|/2) edges of C", _connected_ab_non_ke, _conj1, True),
    ]
}

PROVED_LAWS = tuple(k for k in LAWS if k != "CONJ1")


def _facts(graph_or_facts) -> Facts:
    return graph_or_facts if isinstance(graph_or_facts, Facts) else Facts(graph_or_facts)


def check(graph_or_facts, law_id: str, *, enforce_hypotheses: bool = True) -> LawResult:
    """Evaluate one law on a graph (or on a shared Facts cache)."""
    law = LAWS.get(law_id)
    if law is None:
        raise KeyError(f"unknown law {law_id!r}; known: {', '.join(LAWS)}")
    f = _facts(graph_or_facts)
    try:
        holds, why = law.hypothesis(f)
    except GuardExceeded as exc:
        return LawResult(law_id, False, "skipped", reason=f"hypothesis undecidable within guards: {exc}")
    except InternalInconsistency as exc:
        return LawResult(law_id, False, "fail", witness={"inconsistency": str(exc), "details": exc.details})
    if not holds and enforce_hypotheses:
        return LawResult(law_id, False, "skipped", reason=f"hypothesis not met: {why}")
    try:
        ok, metrics, witness = law.predicate(f)
    except GuardExceeded as exc:
        return LawResult(law_id, holds, "skipped", reason=f"guard exceeded: {exc}")
    except NotEvaluable as exc:
        return LawResult(law_id, holds, "skipped", reason=str(exc))
    except InternalInconsistency as exc:
        return LawResult(law_id, holds, "fail", witness={"inconsistency": str(exc), "details": exc.details})
    if not ok and not any(_nonempty(v) for v in witness.values()):
        witness = dict(witness, metrics=metrics)
    return LawResult(law_id, holds, "pass" if ok else "fail", witness if not ok else {}, metrics)


def _nonempty(v) -> bool:
    return v not in (None, "", (), [], {}, frozenset(), set())


def check_all(graph_or_facts, laws=None) -> list[LawResult]:
    """Every law (or the given subset) in registry order, sharing one Facts cache."""
    f = _facts(graph_or_facts)
    ids = list(LAWS) if laws is None else [law for law in LAWS if law in set(laws)]
    unknown = set(laws or ()) - set(LAWS)
    if unknown:
        raise KeyError(f"unknown laws: {sorted(unknown)}")
    return [check(f, law) for law in ids]


def replay(G: Graph, result: LawResult) -> bool:
    """Re-run a law and confirm the verdict reproduces exactly."""
    again = check(G, result.law_id, enforce_hypotheses=result.applicable or result.verdict == "skipped")
    return again.to_dict() == result.to_dict()


# -- counterexample search --------------------------------------------------------------


@dataclass
class SearchReport:
    law_id: str
    trials: int
    seed: int
    spec: dict
    applicable: int = 0
    passed: int = 0
    skipped: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    instances: list[dict] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def found(self) -> bool:
        return bool(self.counterexamples)

    def summary(self) -> str:
        if self.found:
            return f"{len(self.counterexamples)} counterexample(s) to {self.law_id} in {self.trials} trials"
        return f"no counterexample to {self.law_id} in {self.trials} trials ({self.applicable} applicable)"

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "law": self.law_id,
            "trials": self.trials,
            "seed": self.seed,
            "spec": self.spec,
            "applicable": self.applicable,
            "passed": self.passed,
            "skipped": self.skipped,
            "counterexamples": _jsonable(self.counterexamples),
            "instances": _jsonable(self.instances),
            "status": self.summary(),
        }
        if timing:
            d["elapsed"] = round(self.elapsed, 3)
        return d


def generate_for(law_id: str, spec: GenSpec, seed: int):
    """The instance a search trial with ``seed`` examines."""
    spec = replace(spec, seed=seed)
    if spec.force_non_ke or LAWS[law_id].needs_non_ke:
        return gen_non_ke_almost_bipartite(spec)
    return gen_almost_bipartite(spec)


def reproduce(law_id: str, spec: GenSpec, seed: int) -> LawResult:
    return check(generate_for(law_id, spec, seed).graph, law_id)


def _run_trials(law_id: str, spec: GenSpec, seed: int, indices) -> list[dict]:
    out = []
    for i in indices:
        s = split_seed(seed, i)
        record = {"trial": i, "seed": s}
        try:
            G = generate_for(law_id, spec, s).graph
        except GenerationError as exc:
            record.update(verdict="skipped", reason=str(exc))
            out.append(record)
            continue
        res = check(G, law_id)
        record.update(n=G.n, m=G.m, verdict=res.verdict, applicable=res.applicable)
        record.update({k: v for k, v in res.metrics.items() if isinstance(v, (int, bool, str))})
        if res.failed:
            record["graph"] = {"n": G.n, "edges": [list(e) for e in G.edge_list]}
            record["witness"] = res.to_dict()["witness"]
        elif res.verdict == "skipped":
            record["reason"] = res.reason
        out.append(record)
    return out


def search_counterexample(law_id: str, spec: GenSpec, trials: int, seed: int, workers: int = 1) -> SearchReport:
    """Check ``law_id`` on ``trials`` generated instances.

    Trial i uses ``split_seed(seed, i)``, so the result is independent of
    ``workers`` and each counterexample can be regenerated from its seed.
    """
    if law_id not in LAWS:
        raise KeyError(f"unknown law {law_id!r}")
    spec.validate()
    if LAWS[law_id].needs_non_ke:
        spec = replace(spec, force_non_ke=True)
    start = time.perf_counter()
    if workers <= 1:
        records = _run_trials(law_id, spec, seed, range(trials))
    else:
        chunks = [range(w, trials, workers) for w in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_run_trials, [law_id] * workers, [spec] * workers, [seed] * workers, chunks)
            records = sorted((r for part in parts for r in part), key=lambda r: r["trial"])
    report = SearchReport(law_id, trials, seed, spec.to_dict())
    for r in records:
        if r["verdict"] == "skipped":
            report.skipped += 1
        else:
            report.applicable += 1
            report.passed += r["verdict"] == "pass"
            if r["verdict"] == "fail":
                report.counterexamples.append(r)
        report.instances.append({k: v for k, v in r.items() if k not in ("graph", "witness")})
    report.elapsed = time.perf_counter() - start
    return report

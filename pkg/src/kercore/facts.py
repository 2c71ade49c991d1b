"""Lazily computed, cross-checked invariants of one graph.

``Facts`` is the single place where invariants are computed for law checks
and reports. Whenever two independent routes to the same quantity are both
within their guards, both run and must agree; a disagreement raises
InternalInconsistency carrying both values.
"""

from __future__ import annotations

from functools import cached_property

from .critical import (
    CRITICAL_SETS_LIMIT,
    SCAN_LIMIT,
    critical_difference,
    critical_difference_bruteforce,
    critical_independence_difference_oracle,
    critical_independent_sets,
    enumerate_critical_sets,
    ker,
)
from .errors import GuardExceeded, InternalInconsistency
from .graph import Graph, components, induced_subgraph, neighborhood
from .independence import (
    MAX_VERTICES,
    IndependenceProfile,
    alpha_oracle,
    core_corona_bipartite,
    core_corona_deletion,
    core_corona_fast_ab,
    enumerate_omega,
    is_independent,
    max_independent_set,
)
from .matching import MAX_EDGES, MatchingResult, enumerate_maximum_matchings, is_matching, maximum_matching, mu_exact
from .structure import Decomposition, Recognition, is_bipartite, is_unicyclic, recognize


def _sorted(s) -> list[int]:
    return sorted(s)


class Facts:
    """Cached invariants of ``graph``; every attribute is computed on first use."""

    def __init__(
        self,
        graph: Graph,
        *,
        mis_limit: int = MAX_VERTICES,
        matching_limit: int = MAX_EDGES,
        scan_limit: int = SCAN_LIMIT,
        critical_sets_limit: int = CRITICAL_SETS_LIMIT,
    ):
        self.graph = graph
        self.mis_limit = mis_limit
        self.matching_limit = matching_limit
        self.scan_limit = scan_limit
        self.critical_sets_limit = critical_sets_limit

    # -- structure ---------------------------------------------------------

    @cached_property
    def components(self) -> list[frozenset[int]]:
        return components(self.graph)

    @cached_property
    def connected(self) -> bool:
        return len(self.components) <= 1

    @cached_property
    def bipartite(self) -> bool:
        return is_bipartite(self.graph)

    @cached_property
    def unicyclic(self) -> bool:
        return is_unicyclic(self.graph)

    @cached_property
    def component_recognitions(self) -> list[tuple[tuple[int, ...], Recognition]]:
        """Per-component recognition, certificates relabelled to original ids."""
        out = []
        for comp in self.components:
            H, order = induced_subgraph(self.graph, comp)
            rec = recognize(H)
            if rec.cycle is not None:
                rec = _relabel_recognition(rec, order)
            out.append((order, rec))
        return out

    @cached_property
    def recognition(self) -> Recognition | None:
        """Recognition of the whole graph when connected, else None."""
        if not self.connected:
            return None
        return self.component_recognitions[0][1] if self.components else Recognition("bipartite")

    @cached_property
    def almost_bipartite(self) -> bool:
        """Exactly one odd cycle overall (components other than one are bipartite)."""
        kinds = [rec.kind for _, rec in self.component_recognitions]
        return kinds.count("almost_bipartite") == 1 and kinds.count("multiple_odd_cycles") == 0

    @cached_property
    def connected_almost_bipartite(self) -> bool:
        return self.recognition is not None and self.recognition.accepted

    @cached_property
    def odd_cycle_recognition(self) -> Recognition | None:
        """Recognition of the one non-bipartite component, when it is unique and accepted."""
        if not self.almost_bipartite:
            return None
        return next(rec for _, rec in self.component_recognitions if rec.accepted)

    @property
    def cycle(self):
        return self.recognition.cycle if self.connected_almost_bipartite else None

    @property
    def decomposition(self):
        return self.recognition.decomposition if self.connected_almost_bipartite else None

    @cached_property
    def tractable(self) -> bool:
        """Every component is bipartite or almost bipartite (polynomial alpha/mu)."""
        return all(rec.kind != "multiple_odd_cycles" for _, rec in self.component_recognitions)

    # -- independence and matching ---------------------------------------------

    @cached_property
    def mis(self) -> frozenset[int]:
        G = self.graph
        fast = max_independent_set(G, self.mis_limit)
        if not is_independent(G, fast):
            raise InternalInconsistency("MIS witness is not independent", {"witness": _sorted(fast)})
        if G.n <= self.mis_limit:
            alpha = alpha_oracle(G, self.mis_limit)[0]
            if alpha != len(fast):
                raise InternalInconsistency("alpha routes disagree", {"fast": len(fast), "oracle": alpha})
        return fast

    @cached_property
    def alpha(self) -> int:
        return len(self.mis)

    @cached_property
    def matching(self) -> MatchingResult:
        G = self.graph
        M = maximum_matching(G, self.matching_limit)
        if not is_matching(G, M.edges):
            raise InternalInconsistency("matching witness is not a matching", {"edges": sorted(M.edges)})
        if G.m <= self.matching_limit:
            exact = mu_exact(G, self.matching_limit).size
            if exact != M.size:
                raise InternalInconsistency("mu routes disagree", {"fast": M.size, "exact": exact})
        return M

    @cached_property
    def mu(self) -> int:
        return self.matching.size

    @cached_property
    def ke(self) -> bool:
        return self.alpha + self.mu == self.graph.n

    @cached_property
    def omega(self) -> list[frozenset[int]]:
        return enumerate_omega(self.graph, self.mis_limit)

    @cached_property
    def max_matchings(self) -> list[frozenset[tuple[int, int]]]:
        return enumerate_maximum_matchings(self.graph, self.matching_limit)

    @cached_property
    def core_corona_routes(self) -> dict[str, IndependenceProfile]:
        """All available core/corona computations keyed by method."""
        G = self.graph
        routes = {}
        if self.tractable:
            routes["deletion"] = core_corona_deletion(G, self.mis_limit)
        if self.bipartite:
            routes["bipartite"] = core_corona_bipartite(G)
        if G.n <= self.mis_limit:
            omega = self.omega
            routes["oracle"] = IndependenceProfile(
                len(omega[0]), frozenset.intersection(*omega), frozenset().union(*omega), "oracle", len(omega)
            )
        if self.connected_almost_bipartite and not self.ke:
            routes["fast_ab"] = core_corona_fast_ab(G, self.cycle, self.decomposition)
        if not routes:
            raise GuardExceeded(f"core/corona needs a tractable class or n <= {self.mis_limit}")
        return routes

    @cached_property
    def _core_corona(self) -> IndependenceProfile:
        routes = self.core_corona_routes
        first = next(iter(routes.values()))
        for name, prof in routes.items():
            if (prof.alpha, prof.core, prof.corona) != (self.alpha, first.core, first.corona):
                raise InternalInconsistency(
                    "core/corona routes disagree",
                    {
                        k: {"alpha": p.alpha, "core": _sorted(p.core), "corona": _sorted(p.corona)}
                        for k, p in routes.items()
                    },
                )
        return first

    @property
    def core(self) -> frozenset[int]:
        return self._core_corona.core

    @property
    def corona(self) -> frozenset[int]:
        return self._core_corona.corona

    # -- critical sets ------------------------------------------------------------

    @cached_property
    def _critical(self) -> tuple[int, frozenset[int]]:
        G = self.graph
        d, witness = critical_difference(G)
        if G.n <= self.critical_sets_limit:
            brute = critical_difference_bruteforce(G, self.critical_sets_limit)[0]
            if brute != d:
                raise InternalInconsistency("d(G) routes disagree", {"flow": d, "bruteforce": brute})
        return d, witness

    @property
    def d(self) -> int:
        return self._critical[0]

    @cached_property
    def ker(self) -> frozenset[int]:
        G = self.graph
        k = ker(G)
        if G.n <= self.critical_sets_limit:
            oracle = frozenset.intersection(*self.critical_sets)
            if oracle != k:
                raise InternalInconsistency("ker routes disagree", {"flow": _sorted(k), "oracle": _sorted(oracle)})
        return k

    @cached_property
    def critical_sets(self) -> list[frozenset[int]]:
        return enumerate_critical_sets(self.graph, self.critical_sets_limit)

    @cached_property
    def id(self) -> int:
        return critical_independence_difference_oracle(self.graph, self.scan_limit)[0]

    @cached_property
    def critical_independent_sets(self) -> list[frozenset[int]]:
        return critical_independent_sets(self.graph, self.scan_limit)

    # -- per-part data for almost bipartite graphs ----------------------------------

    @cached_property
    def parts(self) -> dict[int, tuple[Graph, tuple[int, ...]]]:
        """D_y - y for each cycle vertex y, as (graph, new->old ids)."""
        dec = self.decomposition
        return {y: induced_subgraph(self.graph, dec.part_without_root(y)) for y in self.cycle.vertices}

    @cached_property
    def part_profiles(self) -> dict[int, IndependenceProfile]:
        """core/corona of each D_y - y, mapped to original ids."""
        out = {}
        for y, (H, order) in self.parts.items():
            p = core_corona_bipartite(H)
            out[y] = IndependenceProfile(
                p.alpha, frozenset(order[v] for v in p.core), frozenset(order[v] for v in p.corona), p.method
            )
        return out

    @cached_property
    def part_kers(self) -> dict[int, frozenset[int]]:
        return {y: frozenset(order[v] for v in ker(H)) for y, (H, order) in self.parts.items()}

    @cached_property
    def whole_part_profiles(self) -> dict[int, IndependenceProfile]:
        """core_corona_bipartite of each full D_y (root included), ids mapped back."""
        out = {}
        for y, part in self.decomposition.parts.items():
            H, order = induced_subgraph(self.graph, part)
            p = core_corona_bipartite(H)
            out[y] = IndependenceProfile(
                p.alpha, frozenset(order[v] for v in p.core), frozenset(order[v] for v in p.corona), p.method
            )
        return out

    def alpha_of(self, vertices) -> int:
        """alpha of the subgraph induced by ``vertices``."""
        H, _ = induced_subgraph(self.graph, vertices)
        return len(max_independent_set(H, self.mis_limit))

    def mu_of(self, graph: Graph) -> int:
        return maximum_matching(graph, self.matching_limit).size

    def neighborhood(self, A) -> frozenset[int]:
        return neighborhood(self.graph, A)


def _relabel_recognition(rec: Recognition, order) -> Recognition:
    cycle = rec.cycle.relabel(order)
    dec = None
    if rec.decomposition is not None:
        dec = Decomposition(
            {order[y]: frozenset(order[v] for v in p) for y, p in rec.decomposition.parts.items()},
            frozenset(order[v] for v in rec.decomposition.n1),
        )
    return Recognition(rec.kind, cycle, dec)

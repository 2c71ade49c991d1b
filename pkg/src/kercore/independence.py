"""Independence number, maximum independent sets, core and corona.

Three independent routes to core/corona are provided:

* ``core_corona_oracle`` enumerates every maximum independent set (small n);
* ``core_corona_deletion`` uses vertex deletions: v is in the core iff
  alpha(G - v) < alpha(G), and in the corona iff alpha(G - N[v]) = alpha(G) - 1;
* ``core_corona_bipartite`` / ``core_corona_fast_ab`` are the polynomial
  structural formulas for bipartite and almost bipartite non-KE graphs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from .errors import GraphClassError, GuardExceeded
from .graph import Graph, components, delete_edges, induced_subgraph
from .matching import MAX_EDGES, _augmenting_matching, maximum_matching
from .structure import (
    Decomposition,
    OddCycleCertificate,
    bipartition,
    decomposition_for,
    recognize,
)

MAX_VERTICES = 24


@dataclass(frozen=True)
class IndependenceProfile:
    alpha: int
    core: frozenset[int]
    corona: frozenset[int]
    method: str  # "oracle" | "deletion" | "fast"
    omega_count: int | None = None


class KEVerdict(NamedTuple):
    ke: bool
    alpha: int
    mu: int


def is_independent(G: Graph, S) -> bool:
    S = set(S)
    return all(w not in S for v in S for w in G.neighbors(v))


# -- bipartite -----------------------------------------------------------------


def mis_bipartite(G: Graph) -> frozenset[int]:
    """Maximum independent set of a bipartite graph via Konig's construction.

    Z is everything reachable from free left vertices by alternating paths;
    the complement of the minimum cover (L - Z) | (R & Z) is independent.
    """
    sides = bipartition(G)
    if sides is None:
        raise GraphClassError("mis_bipartite requires a bipartite graph")
    left = sorted(sides.left)
    mate = _augmenting_matching(G, left)
    reached = set()
    queue = deque(u for u in left if mate[u] == -1)
    reached.update(queue)
    while queue:
        u = queue.popleft()
        for w in G.neighbors(u):
            if w in reached or mate[u] == w:
                continue
            reached.add(w)
            x = mate[w]
            if x != -1 and x not in reached:
                reached.add(x)
                queue.append(x)
    return frozenset(v for v in range(G.n) if (v in sides.left) == (v in reached))


def alpha_bipartite(G: Graph) -> int:
    """n - mu for bipartite graphs."""
    if bipartition(G) is None:
        raise GraphClassError("alpha_bipartite requires a bipartite graph")
    return G.n - maximum_matching(G).size


# -- almost bipartite ------------------------------------------------------------


def alpha_almost_bipartite(G: Graph, cycle: OddCycleCertificate) -> tuple[int, frozenset[int]]:
    """alpha and a witness for a connected almost bipartite graph.

    Every independent set misses some vertex of the odd cycle, so alpha(G) is
    the best alpha(G - v) over cycle vertices v, and each G - v is bipartite.
    """
    decomposition_for(G, cycle)
    best: frozenset[int] = frozenset()
    for v in cycle.vertices:
        H, order = induced_subgraph(G, (u for u in range(G.n) if u != v))
        S = mis_bipartite(H)
        if len(S) > len(best):
            best = frozenset(order[u] for u in S)
    return len(best), best


# -- exhaustive oracle -------------------------------------------------------------


def _clique_cover_bound(adj: tuple[int, ...], P: int) -> int:
    count = 0
    while P:
        low = P & -P
        v = low.bit_length() - 1
        clique = adj[v] & P
        P &= ~low
        while clique:
            low = clique & -clique
            u = low.bit_length() - 1
            P &= ~low
            clique &= adj[u]
        count += 1
    return count


def _mis_search(G: Graph, collect: bool) -> tuple[int, list[int]]:
    """Branch and bound over maximal-set branching; returns alpha and bitmasks."""
    adj = G.masks
    best = -1
    found: list[int] = []

    def rec(P: int, S: int, size: int) -> None:
        nonlocal best, found
        if not P:
            if size > best:
                best, found = size, [S]
            elif size == best and collect:
                found.append(S)
            return
        limit = best if collect else best + 1
        if size + P.bit_count() < limit or size + _clique_cover_bound(adj, P) < limit:
            return
        # branch on the vertex of least degree inside P: some vertex of N[v] is in S
        v = min(_bits(P), key=lambda x: ((adj[x] & P).bit_count(), x))
        tried = 0
        branch = (adj[v] & P) | (1 << v)
        for u in _bits(branch):
            rec(P & ~adj[u] & ~(1 << u) & ~tried, S | (1 << u), size + 1)
            tried |= 1 << u

    rec((1 << G.n) - 1, 0, 0)
    return max(best, 0), found


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(_bits(mask))


def alpha_oracle(G: Graph, limit: int = MAX_VERTICES) -> tuple[int, frozenset[int]]:
    if G.n > limit:
        raise GuardExceeded(f"independence oracle needs n <= {limit}, graph has n={G.n}")
    alpha, found = _mis_search(G, collect=False)
    return alpha, _mask_to_set(found[0]) if found else frozenset()


def enumerate_omega(G: Graph, limit: int = MAX_VERTICES) -> list[frozenset[int]]:
    """Every maximum independent set, in lexicographic order of sorted members."""
    if G.n > limit:
        raise GuardExceeded(f"MIS enumeration needs n <= {limit}, graph has n={G.n}")
    _, found = _mis_search(G, collect=True)
    return sorted((_mask_to_set(S) for S in found), key=sorted) or [frozenset()]


def core_corona_oracle(G: Graph, limit: int = MAX_VERTICES) -> IndependenceProfile:
    omega = enumerate_omega(G, limit)
    return IndependenceProfile(
        alpha=len(omega[0]),
        core=frozenset.intersection(*omega),
        corona=frozenset().union(*omega),
        method="oracle",
        omega_count=len(omega),
    )


# -- dispatch over the tractable classes ------------------------------------------------


def max_independent_set(G: Graph, limit: int = MAX_VERTICES) -> frozenset[int]:
    """A maximum independent set, solved per component.

    Bipartite and almost bipartite components are polynomial; any other
    component needs the exhaustive oracle and at most ``limit`` vertices.
    """
    parts = components(G)
    if len(parts) <= 1:
        return _mis_connected(G, limit)
    out: set[int] = set()
    for comp in parts:
        if len(comp) == 1:
            out |= comp
            continue
        H, order = induced_subgraph(G, comp)
        out.update(order[v] for v in _mis_connected(H, limit))
    return frozenset(out)


def _mis_connected(G: Graph, limit: int) -> frozenset[int]:
    if G.n <= 1:
        return frozenset(range(G.n))
    rec = recognize(G)
    if rec.kind == "bipartite":
        return mis_bipartite(G)
    if rec.kind == "almost_bipartite":
        return alpha_almost_bipartite(G, rec.cycle)[1]
    return alpha_oracle(G, limit)[1]


def independence_number(G: Graph, limit: int = MAX_VERTICES) -> int:
    return len(max_independent_set(G, limit))


def _without(G: Graph, drop) -> tuple[Graph, tuple[int, ...]]:
    drop = set(drop)
    return induced_subgraph(G, (v for v in range(G.n) if v not in drop))


def core_corona_deletion(G: Graph, limit: int = MAX_VERTICES) -> IndependenceProfile:
    """Core and corona from vertex deletions, reusing every MIS found on the way."""
    S = max_independent_set(G, limit)
    alpha = len(S)
    core = set(S)
    corona = set(S)
    for v in sorted(S):
        if v not in core:
            continue
        H, order = _without(G, [v])
        T = max_independent_set(H, limit)
        if len(T) == alpha:
            witness = {order[u] for u in T}
            core &= witness
            corona |= witness
    for v in range(G.n):
        if v in corona:
            continue
        H, order = _without(G, G.neighbor_sets[v] | {v})
        T = max_independent_set(H, limit)
        if len(T) + 1 == alpha:
            corona.add(v)
            corona.update(order[u] for u in T)
            core &= {order[u] for u in T} | {v}
    return IndependenceProfile(alpha, frozenset(core), frozenset(corona), "deletion")


def core_corona_bipartite(G: Graph) -> IndependenceProfile:
    """Core and corona of a bipartite graph.

    v is in the core iff some maximum matching leaves it unsaturated, i.e.
    mu(G - v) = mu(G); v is in the corona iff alpha(G - N[v]) = alpha(G) - 1.
    """
    if bipartition(G) is None:
        raise GraphClassError("core_corona_bipartite requires a bipartite graph")
    M = maximum_matching(G)
    mu = M.size
    alpha = G.n - mu
    core = set(range(G.n)) - M.saturated
    for v in sorted(M.saturated):
        H, _ = _without(G, [v])
        if maximum_matching(H).size == mu:
            core.add(v)
    S = mis_bipartite(G)
    corona = set(S)
    for v in range(G.n):
        if v in corona:
            continue
        H, order = _without(G, G.neighbor_sets[v] | {v})
        T = mis_bipartite(H)
        if len(T) + 1 == alpha:
            corona.add(v)
            corona.update(order[u] for u in T)
    return IndependenceProfile(alpha, frozenset(core), frozenset(corona), "fast")


def core_corona_fast_ab(
    G: Graph, cycle: OddCycleCertificate, decomposition: Decomposition | None = None
) -> IndependenceProfile:
    """Core and corona of an almost bipartite non-KE graph from its parts.

    core(G) is the union of core(D_y - y), and corona(G) is V(C) plus the
    union of corona(D_y - y). KE inputs are refused because these identities
    do not hold there in general.
    """
    if decomposition is None:
        decomposition = decomposition_for(G, cycle)
    verdict = is_ke(G)
    if verdict.ke:
        raise GraphClassError("core_corona_fast_ab applies only to non-Konig-Egervary graphs")
    core: set[int] = set()
    corona: set[int] = set(cycle.vertices)
    for y in cycle.vertices:
        rest = decomposition.part_without_root(y)
        if not rest:
            continue
        H, order = induced_subgraph(G, rest)
        prof = core_corona_bipartite(H)
        core.update(order[v] for v in prof.core)
        corona.update(order[v] for v in prof.corona)
    return IndependenceProfile(verdict.alpha, frozenset(core), frozenset(corona), "fast")


def is_ke(G: Graph, limit: int = MAX_VERTICES, edge_limit: int = MAX_EDGES) -> KEVerdict:
    """Konig-Egervary test: alpha + mu == n."""
    alpha = independence_number(G, limit)
    mu = maximum_matching(G, edge_limit).size
    return KEVerdict(alpha + mu == G.n, alpha, mu)


def alpha_critical_edges(G: Graph, limit: int = MAX_VERTICES) -> frozenset[tuple[int, int]]:
    """Edges whose deletion raises the independence number."""
    alpha = independence_number(G, limit)
    return frozenset(e for e in G.edge_list if independence_number(delete_edges(G, [e]), limit) > alpha)


def trace(family, X) -> list[frozenset[int]]:
    """The family {F & X : F in family}, deduplicated and sorted."""
    X = frozenset(X)
    return sorted({frozenset(F) & X for F in family}, key=sorted)

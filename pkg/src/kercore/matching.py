"""Maximum matchings.

Bipartite graphs use augmenting paths. A connected almost bipartite graph
reduces to bipartite instances: a maximum matching either avoids the odd
cycle C, or contains some cycle edge yz and matches G - {y, z} optimally.
Both G - E(C) and every G - {y, z} are bipartite. Anything else falls back
to exhaustive search under an edge-count guard.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphClassError, GuardExceeded
from .graph import Graph, components, delete_edges, edge, induced_subgraph
from .structure import OddCycleCertificate, bipartition, decomposition_for, recognize

MAX_EDGES = 32


@dataclass(frozen=True)
class MatchingResult:
    edges: frozenset[tuple[int, int]]

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def saturated(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def relabel(self, new_to_old) -> MatchingResult:
        return MatchingResult(frozenset(edge(new_to_old[u], new_to_old[v]) for u, v in self.edges))


def is_matching(G: Graph, edges) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if not G.has_edge(u, v) or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def _augmenting_matching(G: Graph, left) -> list[int]:
    """Kuhn's algorithm; returns the mate array (-1 for free vertices)."""
    mate = [-1] * G.n
    # greedy start
    for u in left:
        for w in G.neighbors(u):
            if mate[w] == -1:
                mate[u], mate[w] = w, u
                break
    for root in left:
        if mate[root] != -1:
            continue
        visited = set()
        stack = [root]
        iters = [iter(G.neighbors(root))]
        via: list[int] = []
        found = -1
        while stack:
            for w in iters[-1]:
                if w in visited:
                    continue
                visited.add(w)
                if mate[w] == -1:
                    found = w
                    break
                via.append(w)
                stack.append(mate[w])
                iters.append(iter(G.neighbors(mate[w])))
                break
            else:
                stack.pop()
                iters.pop()
                if via:
                    via.pop()
                continue
            if found != -1:
                break
        if found == -1:
            continue
        for x, r in zip(stack, via + [found]):
            mate[x], mate[r] = r, x
    return mate


def max_matching_bipartite(G: Graph) -> MatchingResult:
    """Maximum matching of a bipartite graph by augmenting paths."""
    sides = bipartition(G)
    if sides is None:
        raise GraphClassError("max_matching_bipartite requires a bipartite graph")
    mate = _augmenting_matching(G, sorted(sides.left))
    return MatchingResult(frozenset(edge(u, mate[u]) for u in sides.left if mate[u] != -1))


def mu_almost_bipartite(G: Graph, cycle: OddCycleCertificate) -> MatchingResult:
    """Maximum matching of a connected almost bipartite graph with odd cycle ``cycle``.

    Ties between subproblems go to the earliest: G - E(C) first, then cycle
    edges in cycle order.
    """
    decomposition_for(G, cycle)  # validates the certificate
    best = max_matching_bipartite(delete_edges(G, cycle.edges))
    for y, z in cycle.edge_sequence():
        H, order = induced_subgraph(G, (v for v in range(G.n) if v != y and v != z))
        sub = max_matching_bipartite(H)
        if sub.size + 1 > best.size:
            best = MatchingResult(sub.relabel(order).edges | {(y, z)})
    return best


def mu_exact(G: Graph, limit: int = MAX_EDGES) -> MatchingResult:
    """Exact maximum matching by include/exclude recursion over edges.

    Returns the lexicographically smallest maximum matching in edge order.
    """
    if G.m > limit:
        raise GuardExceeded(f"mu_exact needs m <= {limit}, graph has m={G.m}")
    edges = G.edge_list
    total = len(edges)
    best: list[tuple[int, int]] = []
    chosen: list[tuple[int, int]] = []

    def rec(i: int, used: int) -> None:
        nonlocal best
        free = G.n - 2 * len(chosen)
        if len(chosen) + min(total - i, free // 2) <= len(best):
            return
        if i == total:
            best = list(chosen)
            return
        u, v = edges[i]
        bits = (1 << u) | (1 << v)
        if not used & bits:
            chosen.append(edges[i])
            rec(i + 1, used | bits)
            chosen.pop()
        rec(i + 1, used)

    if total:
        rec(0, 0)
    return MatchingResult(frozenset(best))


def enumerate_maximum_matchings(G: Graph, limit: int = MAX_EDGES) -> list[frozenset[tuple[int, int]]]:
    """All maximum matchings, sorted by their sorted edge lists."""
    mu = mu_exact(G, limit).size
    slack = G.n - 2 * mu  # number of vertices every maximum matching leaves free
    adj = G.masks
    out = []
    chosen: list[tuple[int, int]] = []

    def rec(free: int, budget: int) -> None:
        if not free:
            out.append(frozenset(chosen))
            return
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        if budget:
            rec(rest, budget - 1)
        cand = adj[v] & rest
        while cand:
            low = cand & -cand
            u = low.bit_length() - 1
            chosen.append((v, u))
            rec(rest & ~low, budget)
            chosen.pop()
            cand ^= low

    rec((1 << G.n) - 1, slack)
    return sorted(out, key=sorted)


def maximum_matching(G: Graph, limit: int = MAX_EDGES) -> MatchingResult:
    """Maximum matching of any graph whose components are bipartite or almost bipartite.

    Other components are solved exhaustively when they have at most ``limit``
    edges; larger ones raise GuardExceeded.
    """
    parts = components(G)
    if len(parts) == 1 or G.n == 0:
        return _matching_connected(G, limit)
    edges: set[tuple[int, int]] = set()
    for comp in parts:
        if len(comp) < 2:
            continue
        H, order = induced_subgraph(G, comp)
        edges |= _matching_connected(H, limit).relabel(order).edges
    return MatchingResult(frozenset(edges))


def _matching_connected(G: Graph, limit: int) -> MatchingResult:
    rec = recognize(G)
    if rec.kind == "bipartite":
        return max_matching_bipartite(G)
    if rec.kind == "almost_bipartite":
        return mu_almost_bipartite(G, rec.cycle)
    return mu_exact(G, limit)

"""Critical difference, critical independence difference and ker(G).

d(G) = max |X| - |N(X)| is a project-selection problem: choosing vertex v
earns 1 and obliges paying 1 for every u in N(v). In the network

    source -> chooser(v)       capacity 1
    chooser(v) -> payer(u)     capacity n + 1, for each u in N(v)
    payer(u) -> sink           capacity 1

a minimum cut has value n - d(G), and the choosers left on the source side
form a critical set.
"""

from __future__ import annotations

from collections import deque

import numpy as np

from .errors import GuardExceeded, InternalInconsistency
from .graph import Graph, neighborhood
from .independence import is_independent

SCAN_LIMIT = 20  # subset scans for d and id
CRITICAL_SETS_LIMIT = 16


class FlowNetwork:
    """Integer-capacity network solved with Dinic's algorithm."""

    def __init__(self, size: int):
        self.size = size
        self.adj: list[list[int]] = [[] for _ in range(size)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, cap: int) -> None:
        self.adj[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.adj[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def _levels(self, s: int) -> list[int]:
        level = [-1] * self.size
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self.adj[u]:
                v = self.to[e]
                if self.cap[e] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level

    def max_flow(self, s: int, t: int) -> int:
        to, cap, adj = self.to, self.cap, self.adj
        flow = 0
        while True:
            level = self._levels(s)
            if level[t] < 0:
                return flow
            it = [0] * self.size
            while True:
                path: list[int] = []
                u = s
                while u != t:
                    while it[u] < len(adj[u]):
                        e = adj[u][it[u]]
                        if cap[e] > 0 and level[to[e]] == level[u] + 1:
                            break
                        it[u] += 1
                    else:
                        if u == s:
                            break
                        # dead end: retreat and never revisit u in this phase
                        level[u] = -1
                        e = path.pop()
                        u = to[e ^ 1]
                        it[u] += 1
                        continue
                    path.append(e)
                    u = to[e]
                if u != t:
                    break
                push = min(cap[e] for e in path)
                for e in path:
                    cap[e] -= push
                    cap[e ^ 1] += push
                flow += push

    def reachable(self, s: int) -> set[int]:
        """Vertices reachable from s in the residual network."""
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self.adj[u]:
                v = self.to[e]
                if self.cap[e] > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen


def diff(G: Graph, X) -> int:
    """|X| - |N(X)| with the open neighborhood."""
    X = frozenset(X)
    return len(X) - len(neighborhood(G, X))


def _solve(G: Graph, excluded: int | None = None) -> tuple[int, frozenset[int]]:
    """Max of diff(X) over X avoiding ``excluded``, with the minimal optimal X."""
    n = G.n
    source, sink = 2 * n, 2 * n + 1
    net = FlowNetwork(2 * n + 2)
    infinite = n + 1
    for v in range(n):
        if v != excluded:
            net.add_edge(source, v, 1)
        net.add_edge(n + v, sink, 1)
        for u in G.neighbors(v):
            net.add_edge(v, n + u, infinite)
    cut = net.max_flow(source, sink)
    profit = n - (excluded is not None)
    side = net.reachable(source)
    return profit - cut, frozenset(v for v in range(n) if v in side)


def critical_difference(G: Graph) -> tuple[int, frozenset[int]]:
    """d(G) by minimum cut, with a critical set attaining it.

    The witness is the chooser side of the source-minimal minimum cut, which
    is the smallest critical set.
    """
    d, witness = _solve(G)
    if diff(G, witness) != d:
        raise InternalInconsistency("min-cut witness does not attain d(G)", {"d": d, "witness": sorted(witness)})
    return d, witness


def ker(G: Graph) -> frozenset[int]:
    """The unique minimal critical set.

    v belongs to ker(G) iff every critical set contains v, i.e. iff the best
    difference over sets avoiding v is below d(G); that is one re-solve with
    chooser(v) cut off from the source. Only members of a known critical set
    need re-solving, since ker lies inside every critical set.
    """
    d, witness = critical_difference(G)
    out = frozenset(v for v in sorted(witness) if _solve(G, excluded=v)[0] < d)
    if diff(G, out) != d or not is_independent(G, out) or out != witness:
        raise InternalInconsistency(
            "ker post-condition violated",
            {"d": d, "ker": sorted(out), "diff": diff(G, out), "min_cut_witness": sorted(witness)},
        )
    return out


# -- exhaustive subset scans ------------------------------------------------------------


def _subset_tables(G: Graph, limit: int):
    """Per-subset neighborhood masks, independence flags and differences."""
    if G.n > limit:
        raise GuardExceeded(f"subset scan needs n <= {limit}, graph has n={G.n}")
    n = G.n
    total = 1 << n
    nbr = np.zeros(total, dtype=np.int64)
    indep = np.ones(total, dtype=bool)
    for i, a in enumerate(G.masks):
        lo = 1 << i
        nbr[lo : 2 * lo] = nbr[:lo] | a
        indep[lo : 2 * lo] = indep[:lo] & ((np.arange(lo, dtype=np.int64) & a) == 0)
    sizes = np.bitwise_count(np.arange(total, dtype=np.int64)).astype(np.int64)
    diffs = sizes - np.bitwise_count(nbr).astype(np.int64)
    return diffs, indep


def _mask_set(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def critical_difference_bruteforce(G: Graph, limit: int = SCAN_LIMIT) -> tuple[int, frozenset[int]]:
    """d(G) by scanning all 2^n subsets; witness is the first maximizer in mask order."""
    diffs, _ = _subset_tables(G, limit)
    best = int(np.argmax(diffs))
    return int(diffs[best]), _mask_set(best)


def critical_independence_difference_oracle(G: Graph, limit: int = SCAN_LIMIT) -> tuple[int, frozenset[int]]:
    """id(G): the best difference over independent sets only."""
    diffs, indep = _subset_tables(G, limit)
    masked = np.where(indep, diffs, np.iinfo(np.int64).min)
    best = int(np.argmax(masked))
    return int(masked[best]), _mask_set(best)


def enumerate_critical_sets(G: Graph, limit: int = CRITICAL_SETS_LIMIT) -> list[frozenset[int]]:
    """Every X with diff(X) = d(G), sorted by sorted members."""
    diffs, _ = _subset_tables(G, limit)
    hits = np.flatnonzero(diffs == diffs.max())
    return sorted((_mask_set(int(x)) for x in hits), key=sorted)


def critical_independent_sets(G: Graph, limit: int = SCAN_LIMIT) -> list[frozenset[int]]:
    """Every independent X with diff(X) = id(G)."""
    diffs, indep = _subset_tables(G, limit)
    masked = np.where(indep, diffs, np.iinfo(np.int64).min)
    hits = np.flatnonzero(masked == masked.max())
    return sorted((_mask_set(int(x)) for x in hits), key=sorted)


def ker_oracle(G: Graph, limit: int = CRITICAL_SETS_LIMIT) -> frozenset[int]:
    """Intersection of all critical sets."""
    return frozenset.intersection(*enumerate_critical_sets(G, limit))

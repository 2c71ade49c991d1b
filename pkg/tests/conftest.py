from __future__ import annotations

import itertools

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from kercore.graph import Graph

settings.register_profile("default", max_examples=120, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 10, connected: bool = False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    edges = set(chosen)
    if connected:
        for v in range(1, n):
            u = draw(st.integers(0, v - 1))
            edges.add((u, v))
    return Graph(n, sorted(edges))


@st.composite
def bipartite_graphs(draw, max_side: int = 6):
    a = draw(st.integers(0, max_side))
    b = draw(st.integers(0, max_side))
    pairs = [(u, a + v) for u in range(a) for v in range(b)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(a + b, chosen)


def odd_cycles(G: Graph) -> set[frozenset[tuple[int, int]]]:
    """Every odd simple cycle as an edge set (brute force; n <= 12)."""
    found = set()
    adj = G.neighbor_sets

    def extend(start, path, on_path):
        u = path[-1]
        for w in adj[u]:
            if w == start and len(path) >= 3 and len(path) % 2 == 1:
                cyc = path + [start]
                found.add(frozenset((min(a, b), max(a, b)) for a, b in zip(cyc, cyc[1:])))
            elif w > start and w not in on_path:
                on_path.add(w)
                extend(start, path + [w], on_path)
                on_path.discard(w)

    for s in range(G.n):
        extend(s, [s], {s})
    return found


def brute_alpha(G: Graph) -> int:
    best = 0
    for mask in range(1 << G.n):
        if mask.bit_count() > best and all(not (G.masks[v] & mask) for v in range(G.n) if mask >> v & 1):
            best = mask.bit_count()
    return best

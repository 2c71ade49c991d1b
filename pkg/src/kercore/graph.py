"""Immutable simple graphs on dense integer vertex ids, plus edge-list I/O."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from functools import cached_property

from .errors import GraphFormatError

VertexSet = frozenset


def edge(u: int, v: int) -> tuple[int, int]:
    """Canonical form of an undirected edge."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected loopless graph on vertices ``0 .. n-1``.

    Instances are immutable; every operator returns a new graph.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(tuple(sorted(s)) for s in adj)

    # -- basic accessors -------------------------------------------------

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self._adj)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighborhoods as int bitmasks; used by the exhaustive oracles."""
        return tuple(sum(1 << u for u in a) for a in self._adj)

    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def edge_list(self) -> tuple[tuple[int, int], ...]:
        """All edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return tuple((u, v) for u in range(self.n) for v in self._adj[u] if u < v)

    def edges(self) -> tuple[tuple[int, int], ...]:
        return self.edge_list

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- construction helpers ---------------------------------------------

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, [(u, v) for u in range(n) for v in range(u + 1, n)])

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def star(cls, leaves: int) -> Graph:
        """Star with center 0 and leaves ``1..leaves``."""
        return cls(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def _check_ids(G: Graph, A: Iterable[int]) -> frozenset[int]:
    A = frozenset(A)
    for v in A:
        if not 0 <= v < G.n:
            raise ValueError(f"vertex {v} out of range for graph with n={G.n}")
    return A


def neighborhood(G: Graph, A: Iterable[int]) -> frozenset[int]:
    """Open neighborhood N(A); may intersect A."""
    A = _check_ids(G, A)
    out: set[int] = set()
    for v in A:
        out.update(G.neighbors(v))
    return frozenset(out)


def closed_neighborhood(G: Graph, A: Iterable[int]) -> frozenset[int]:
    A = _check_ids(G, A)
    return A | neighborhood(G, A)


def induced_subgraph(G: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph spanned by ``keep``, relabelled densely in increasing id order.

    Returns the subgraph and the new->old id table.
    """
    order = tuple(sorted(_check_ids(G, keep)))
    index = {v: i for i, v in enumerate(order)}
    edges = [(index[u], index[v]) for u, v in G.edge_list if u in index and v in index]
    return Graph(len(order), edges), order


def delete_vertices(G: Graph, W: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """G - W with survivors relabelled densely; returns the old->new id map."""
    W = _check_ids(G, W)
    H, order = induced_subgraph(G, (v for v in range(G.n) if v not in W))
    return H, {old: new for new, old in enumerate(order)}


def delete_edges(G: Graph, F: Iterable[tuple[int, int]]) -> Graph:
    """G - F; vertex ids are preserved."""
    drop = set()
    for u, v in F:
        e = edge(u, v)
        if not (0 <= e[0] and e[1] < G.n) or not G.has_edge(*e):
            raise ValueError(f"{e} is not an edge of the graph")
        drop.add(e)
    if not drop:
        return G
    return Graph(G.n, [e for e in G.edge_list if e not in drop])


def components(G: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by their minimum vertex."""
    seen = [False] * G.n
    out = []
    for root in range(G.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in G.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(frozenset(comp))
    return out


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(components(G)) == 1


# -- edge-list format --------------------------------------------------------


def _ints(line: str, lineno: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise GraphFormatError(f"expected two integers, got {line!r}", lineno)
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"expected two integers, got {line!r}", lineno) from None
    return a, b


def load_graph(text: str) -> Graph:
    """Parse the ``n m`` / ``u v`` edge-list format.

    Blank lines and ``#`` comments are ignored. Every edge line must satisfy
    ``0 <= u < v < n``; self-loops, duplicates and out-of-range ids are
    rejected with the offending line number.
    """
    header = None
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        a, b = _ints(line, lineno)
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError("header counts must be non-negative", lineno)
            header = (a, b)
            continue
        n = header[0]
        if a == b:
            raise GraphFormatError(f"self-loop at vertex {a}", lineno)
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError(f"vertex id out of range 0..{n - 1}: {a} {b}", lineno)
        if a > b:
            raise GraphFormatError(f"edge must be written with u < v: {a} {b}", lineno)
        if (a, b) in seen:
            raise GraphFormatError(f"duplicate edge {a} {b} (first on line {seen[a, b]})", lineno)
        seen[a, b] = lineno
        edges.append((a, b))
    if header is None:
        raise GraphFormatError("missing 'n m' header")
    if len(edges) != header[1]:
        raise GraphFormatError(f"header declares {header[1]} edges, found {len(edges)}")
    return Graph(header[0], edges)


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return load_graph(fh.read())


def format_graph(G: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{G.n} {G.m}")
    lines.extend(f"{u} {v}" for u, v in G.edge_list)
    return "\n".join(lines) + "\n"


def dump_graph(G: Graph, path, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(G, comment))

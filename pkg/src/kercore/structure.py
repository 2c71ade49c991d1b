"""Bipartiteness, odd cycles and almost-bipartite recognition.

A connected graph is *almost bipartite* when it has exactly one odd cycle C.
Recognition is polynomial: find any odd cycle C, delete its edges, and accept
iff every component of what remains is bipartite and holds exactly one vertex
of C. Those components are the parts D_y, one per cycle vertex y.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import CertificateMismatch
from .graph import Graph, components, delete_edges, edge, is_connected


@dataclass(frozen=True)
class Bipartition:
    left: frozenset[int]
    right: frozenset[int]


@dataclass(frozen=True)
class OddCycleCertificate:
    """An odd cycle given as a cyclic vertex sequence.

    Stored in canonical form: rotated to start at the smallest id and oriented
    so that the second vertex is smaller than the last.
    """

    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = self.vertices
        if len(vs) < 3 or len(vs) % 2 == 0:
            raise ValueError(f"odd cycle must have odd length >= 3, got {len(vs)}")
        if len(set(vs)) != len(vs):
            raise ValueError("cycle vertices must be distinct")
        object.__setattr__(self, "vertices", _canonical_rotation(tuple(vs)))

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        vs = self.vertices
        return frozenset(edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def edge_sequence(self) -> list[tuple[int, int]]:
        """Cycle edges in traversal order starting from the first vertex."""
        vs = self.vertices
        return [edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def is_in(self, G: Graph) -> bool:
        vs = self.vertices
        return all(0 <= v < G.n for v in vs) and all(G.has_edge(*e) for e in self.edges)

    def is_chordless_in(self, G: Graph) -> bool:
        own = self.edges
        vs = self.vertex_set
        return all(w not in vs or edge(v, w) in own for v in vs for w in G.neighbors(v))

    def relabel(self, mapping) -> OddCycleCertificate:
        return OddCycleCertificate(tuple(mapping[v] for v in self.vertices))


def _canonical_rotation(vs: tuple[int, ...]) -> tuple[int, ...]:
    i = vs.index(min(vs))
    rot = vs[i:] + vs[:i]
    if rot[1] > rot[-1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


@dataclass(frozen=True)
class Decomposition:
    """Parts D_y of an almost bipartite graph plus N_1(C).

    ``parts`` maps each cycle vertex y to the vertex set of the component of
    G - E(C) containing y.
    """

    parts: dict[int, frozenset[int]]
    n1: frozenset[int]

    def part_without_root(self, y: int) -> frozenset[int]:
        return self.parts[y] - {y}


@dataclass(frozen=True)
class Recognition:
    kind: str  # "bipartite" | "almost_bipartite" | "multiple_odd_cycles"
    cycle: OddCycleCertificate | None = None
    decomposition: Decomposition | None = None

    @property
    def accepted(self) -> bool:
        return self.kind == "almost_bipartite"


def _two_color(G: Graph):
    color = [-1] * G.n
    parent = [-1] * G.n
    depth = [0] * G.n
    for root in range(G.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in G.neighbors(u):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return color, parent, depth, (u, w)
    return color, parent, depth, None


def bipartition(G: Graph) -> Bipartition | None:
    """2-coloring with the smallest vertex of each component on the left, or None."""
    color, _, _, conflict = _two_color(G)
    if conflict is not None:
        return None
    left = frozenset(v for v in range(G.n) if color[v] == 0)
    return Bipartition(left, frozenset(range(G.n)) - left)


def is_bipartite(G: Graph) -> bool:
    return _two_color(G)[3] is None


def find_odd_cycle(G: Graph) -> OddCycleCertificate | None:
    """Some odd cycle of G, or None if G is bipartite.

    The cycle closes the first same-parity edge met by BFS from ascending
    roots; it is not necessarily shortest.
    """
    _, parent, depth, conflict = _two_color(G)
    if conflict is None:
        return None
    u, w = conflict
    # BFS only produces same-parity non-tree edges between equal depths
    assert depth[u] == depth[w]
    left, right = [u], [w]
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    cycle = left + right[-2::-1]
    return OddCycleCertificate(tuple(cycle))


def _decompose(G: Graph, cycle: OddCycleCertificate) -> Decomposition | None:
    H = delete_edges(G, cycle.edges)
    if not is_bipartite(H):
        return None
    on_cycle = cycle.vertex_set
    parts = {}
    for comp in components(H):
        roots = comp & on_cycle
        if len(roots) > 1:
            return None
        if roots:
            (y,) = roots
            parts[y] = comp
    if sum(len(p) for p in parts.values()) != G.n:
        # some component misses C entirely; impossible when G is connected
        return None
    n1 = frozenset(v for v in range(G.n) if v not in on_cycle and any(w in on_cycle for w in G.neighbors(v)))
    return Decomposition(parts, n1)


def recognize(G: Graph) -> Recognition:
    """Classify a connected graph by its odd cycles."""
    if not is_connected(G):
        raise ValueError("almost-bipartite recognition needs a connected graph; split components first")
    cycle = find_odd_cycle(G)
    if cycle is None:
        return Recognition("bipartite")
    decomposition = _decompose(G, cycle)
    if decomposition is None:
        return Recognition("multiple_odd_cycles", cycle)
    if not cycle.is_chordless_in(G):
        raise AssertionError("accepted odd cycle has a chord")
    return Recognition("almost_bipartite", cycle, decomposition)


def almost_bipartite(G: Graph) -> tuple[OddCycleCertificate, Decomposition] | None:
    """Unique odd cycle and {D_y} decomposition of a connected graph, or None."""
    rec = recognize(G)
    if not rec.accepted:
        return None
    return rec.cycle, rec.decomposition


def decomposition_for(G: Graph, cycle: OddCycleCertificate) -> Decomposition:
    """Decomposition induced by a caller-supplied certificate.

    Raises CertificateMismatch unless ``cycle`` is an odd cycle of G that
    certifies G as almost bipartite.
    """
    if not cycle.is_in(G):
        raise CertificateMismatch(f"cycle {cycle.vertices} is not a cycle of the graph")
    decomposition = _decompose(G, cycle)
    if decomposition is None:
        raise CertificateMismatch("graph is not almost bipartite with the given cycle")
    return decomposition


def is_unicyclic(G: Graph) -> bool:
    """True iff G has exactly one cycle (all components but one are trees)."""
    cyclic = 0
    for comp in components(G):
        m = sum(1 for v in comp for w in G.neighbors(v) if v < w)
        if m > len(comp):
            return False
        cyclic += m == len(comp)
    return cyclic == 1

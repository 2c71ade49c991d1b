"""Named small graphs used in tests, docs and the CLI.

The ``fig*`` graphs are laid out on two rows; ``Bx`` is the bottom-row
vertex at horizontal position x and ``Tx`` the top-row one. Vertex ids
follow the order in which names are listed, and ``labels`` maps the
letters that name distinguished vertices (a, b, u, ...) to ids.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph


@dataclass(frozen=True)
class Fixture:
    name: str
    graph: Graph
    names: tuple[str, ...]
    labels: dict[str, int] = field(default_factory=dict)

    def ids(self, *letters: str) -> frozenset[int]:
        return frozenset(self.labels[x] for x in letters)

    def id(self, name: str) -> int:
        return self.names.index(name)


def _build(name: str, names: str, edges: str, labels: dict[str, str] | None = None) -> Fixture:
    order = tuple(names.split())
    index = {v: i for i, v in enumerate(order)}
    pairs = [tuple(index[x] for x in e.split("-")) for e in edges.split()]
    graph = Graph(len(order), [(min(u, v), max(u, v)) for u, v in pairs])
    return Fixture(name, graph, order, {k: index[v] for k, v in (labels or {}).items()})


def _path(prefix: str, lo: int, hi: int) -> str:
    return " ".join(f"{prefix}{i}-{prefix}{i + 1}" for i in range(lo, hi))


def tri_star() -> Fixture:
    """Triangle y1 y2 y3 with y1-a and a adjacent to b, c."""
    return _build(
        "tri-star",
        "y1 y2 y3 a b c",
        "y1-y2 y2-y3 y1-y3 y1-a a-b a-c",
        {"y1": "y1", "y2": "y2", "y3": "y3", "a": "a", "b": "b", "c": "c"},
    )


def bull() -> Fixture:
    """Triangle t1 t2 t3 with pendants p1 on t1 and p2 on t2."""
    return _build("bull", "t1 t2 t3 p1 p2", "t1-t2 t2-t3 t1-t3 t1-p1 t2-p2", {x: x for x in "t1 t2 t3 p1 p2".split()})


def k3() -> Fixture:
    return Fixture("K3", Graph.complete(3), ("0", "1", "2"))


def c5() -> Fixture:
    return Fixture("C5", Graph.cycle(5), tuple("01234"))


def k4() -> Fixture:
    return Fixture("K4", Graph.complete(4), tuple("0123"))


def fig5() -> Fixture:
    """KE graph with core {a,b,c} and ker {a,b}."""
    return _build(
        "fig5",
        "B4 B5 B6 B7 B8 B9 B10 T5 T7 T9 T10",
        _path("B", 4, 10) + " B5-T5 T7-B8 B7-T7 T7-T9 B9-T9 T9-T10 B10-T10",
        {"a": "B4", "b": "T5", "c": "B6"},
    )


def fig4_g1() -> Fixture:
    """Almost bipartite KE graph with core {a} and empty ker."""
    return _build("fig4-G1", "B2 B3 B4 B5 T3 T4", _path("B", 2, 5) + " T3-T4 B3-T3 T4-B5", {"a": "B2"})


def fig4_g2() -> Fixture:
    """Almost bipartite KE graph with core {u,v,w} and ker {u,v}."""
    return _build(
        "fig4-G2",
        "B7 B8 B9 B10 B11 B12 T8 T9 T10 T11 T12",
        _path("B", 7, 12) + " B8-T8 B9-T9 B9-T10 B10-T10 B11-T11 T11-T12 B12-T12",
        {"u": "B7", "v": "T8", "w": "T9"},
    )


def fig11222_g1() -> Fixture:
    """Almost bipartite KE graph where core equals the union of part cores."""
    return _build(
        "fig11222-G1",
        "B2 B3 B4 B5 B6 B7 T3 T4 T5",
        _path("B", 2, 7) + " B3-T3 B4-T4 T4-T5 T5-B6",
        {"a": "B2", "b": "T3", "c": "B7"},
    )


def fig11222_g2() -> Fixture:
    """Almost bipartite KE graph with core {u,v,w} but union of part cores {u,w}."""
    return _build(
        "fig11222-G2",
        "B9 B10 B11 B12 B13 T11 T12",
        _path("B", 9, 13) + " B10-T11 T11-T12 B12-T12",
        {"u": "B9", "v": "B11", "w": "B13"},
    )


def fig11_g1() -> Fixture:
    """Almost bipartite KE graph; as drawn, every maximum matching meets its 5-cycle."""
    return _build(
        "fig11-G1",
        "B2 B3 B4 B5 B6 B7 T3 T4 T5 T6 T7",
        _path("B", 2, 7) + " " + _path("T", 3, 7) + " B3-T4 B5-T5",
    )


def fig11_g2() -> Fixture:
    return _build(
        "fig11-G2",
        "B9 B10 B11 B12 T9 T10 T12",
        _path("B", 9, 12) + " T9-T10 B10-T10 T10-B11 B11-T12",
    )


def fig8_g1() -> Fixture:
    """KE graph with ker {x,y}; as drawn, core is {x,y,z} plus T4."""
    return _build(
        "fig8-G1",
        "B2 B3 B4 B5 B6 B7 T2 T4 T6",
        _path("B", 2, 7) + " T2-B3 B3-T4 B4-T4 T6-B7 B6-T6",
        {"x": "B2", "y": "T2", "z": "B5"},
    )


def fig8_g2() -> Fixture:
    """Non-KE graph (contains K4) with ker {b,c} and core {a,b,c}."""
    return _build(
        "fig8-G2",
        "B9 B10 B11 B12 B13 T9 T10 T12",
        _path("B", 9, 13) + " B9-T10 T9-B10 B9-T9 T9-T10 B10-T10 B12-T12",
        {"a": "B11", "b": "T12", "c": "B13"},
    )


def fig7_g1() -> Fixture:
    """KE graph; as drawn, core is {x, T5, B6}."""
    return _build(
        "fig7-G1",
        "B2 B3 B4 B5 B6 T2 T5 T6",
        _path("B", 2, 6) + " B2-T2 T2-B3 B5-T5 T5-T6 B6-T6",
        {"x": "B4"},
    )


def fig7_g2() -> Fixture:
    """Non-KE graph with core {y}."""
    return _build(
        "fig7-G2",
        "B8 B9 B10 B11 B12 T9 T12",
        _path("B", 8, 12) + " B8-T9 B9-T9 B11-T12 B12-T12",
        {"y": "B10"},
    )


def fig9() -> Fixture:
    """Non-KE graph with two odd cycles; corona and N(core) miss only a."""
    return _build(
        "fig9",
        "B4 B5 B6 B7 B8 B9 T4 T6 T7 T8",
        _path("B", 4, 9) + " B4-T4 T4-B5 B5-T6 T6-T7 B7-T7 B8-T8",
        {"a": "B5", "b": "T8", "c": "B9"},
    )


FIXTURES = {
    f().name: f
    for f in (
        tri_star,
        bull,
        k3,
        c5,
        k4,
        fig5,
        fig4_g1,
        fig4_g2,
        fig11222_g1,
        fig11222_g2,
        fig11_g1,
        fig11_g2,
        fig8_g1,
        fig8_g2,
        fig7_g1,
        fig7_g2,
        fig9,
    )
}


def get(name: str) -> Fixture:
    return FIXTURES[name]()

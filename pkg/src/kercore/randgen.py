"""Seeded random graphs with known structure.

Almost bipartite graphs are assembled from an odd cycle and, for each cycle
vertex y, a connected bipartite *gadget* containing y. Gadgets never share
edges with one another, which loses no generality: in an almost bipartite
graph the components of G - E(C) are pairwise disjoint.

Seeds are 64-bit integers. ``split_seed`` derives independent per-trial
seeds from a base seed and a trial index, so parallel workers can draw from
disjoint streams and any trial can be regenerated on its own.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import asdict, dataclass, field, replace

from .errors import GenerationError
from .graph import Graph
from .independence import core_corona_bipartite, is_ke
from .structure import Decomposition, OddCycleCertificate, decomposition_for

GADGET_KINDS = ("singleton", "path", "star", "random")
REJECTION_BUDGET = 200


def split_seed(seed: int, index: int) -> int:
    """Derive the 64-bit seed of trial ``index`` from a base seed (blake2b of both)."""
    digest = hashlib.blake2b(f"{seed}:{index}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


@dataclass(frozen=True)
class GenSpec:
    """Parameters of the almost-bipartite generator.

    ``cycle_len=None`` draws an odd length in ``3..max_cycle_len`` that fits
    the vertex budget. ``max_n`` / ``max_m`` cap the output size; gadget
    sizes are drawn from ``min_size..max_size`` within the remaining budget.
    """

    cycle_len: int | None = None
    gadgets: tuple[str, ...] = GADGET_KINDS
    min_size: int = 1
    max_size: int = 5
    edge_density: float = 0.3
    force_non_ke: bool = False
    max_n: int | None = None
    max_m: int | None = None
    max_cycle_len: int = 9
    shuffle: bool = True
    seed: int = 0

    def validate(self) -> None:
        if self.cycle_len is not None and (self.cycle_len < 3 or self.cycle_len % 2 == 0):
            raise ValueError(f"cycle length must be odd and >= 3, got {self.cycle_len}")
        if self.max_cycle_len < 3:
            raise ValueError("max_cycle_len must be >= 3")
        if not self.gadgets or any(g not in GADGET_KINDS for g in self.gadgets):
            raise ValueError(f"gadget kinds must be drawn from {GADGET_KINDS}, got {self.gadgets}")
        if not 1 <= self.min_size <= self.max_size:
            raise ValueError("gadget size bounds need 1 <= min_size <= max_size")
        if not 0.0 <= self.edge_density <= 1.0:
            raise ValueError("edge density must lie in [0, 1]")
        if self.max_n is not None and self.max_n < (self.cycle_len or 3):
            raise ValueError("max_n is smaller than the odd cycle")
        if self.max_m is not None and self.max_m < (self.max_n or 0):
            raise ValueError("max_m must be at least max_n (spanning edges are mandatory)")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned value")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["gadgets"] = list(self.gadgets)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> GenSpec:
        d = dict(d)
        if "gadgets" in d:
            d["gadgets"] = tuple(d["gadgets"])
        return cls(**d)


@dataclass(frozen=True)
class Gadget:
    """Connected bipartite graph on ``0..size-1``; vertex 0 is the cycle vertex y."""

    size: int
    edges: tuple[tuple[int, int], ...] = field(default=())
    kind: str = "singleton"


@dataclass(frozen=True)
class Generated:
    graph: Graph
    cycle: OddCycleCertificate
    decomposition: Decomposition
    spec: GenSpec | None = None

    def __iter__(self):
        return iter((self.graph, self.cycle, self.decomposition))


def assemble(cycle_len: int, gadgets, rng: random.Random | None = None) -> Generated:
    """Glue one gadget onto each cycle vertex; cycle vertices get ids 0..k-1.

    With ``rng`` the final ids are randomly permuted.
    """
    if len(gadgets) != cycle_len:
        raise ValueError("need exactly one gadget per cycle vertex")
    edges = [(i, (i + 1) % cycle_len) for i in range(cycle_len)]
    parts: dict[int, list[int]] = {}
    nxt = cycle_len
    for y, g in enumerate(gadgets):
        ids = [y] + list(range(nxt, nxt + g.size - 1))
        nxt += g.size - 1
        parts[y] = ids
        edges.extend((ids[a], ids[b]) for a, b in g.edges)
    perm = list(range(nxt))
    if rng is not None:
        rng.shuffle(perm)
    G = Graph(nxt, [(perm[u], perm[v]) for u, v in edges])
    cycle = OddCycleCertificate(tuple(perm[i] for i in range(cycle_len)))
    decomposition = decomposition_for(G, cycle)
    expected = {perm[y]: frozenset(perm[v] for v in ids) for y, ids in parts.items()}
    if decomposition.parts != expected:
        raise GenerationError("assembled graph does not decompose into its gadgets")
    return Generated(G, cycle, decomposition)


# -- gadgets ------------------------------------------------------------------------


def path_gadget(size: int, position: int = 0) -> Gadget:
    """Path on ``size`` vertices with y at ``position`` along it."""
    order = list(range(1, size))
    order.insert(position, 0)
    return Gadget(size, tuple((order[i], order[i + 1]) for i in range(size - 1)), "path")


def star_gadget(leaves: int, role: str = "leaf") -> Gadget:
    """Star with ``leaves`` leaves, y either at the center or at a leaf.

    With y at a leaf and at least two other leaves, y is in the gadget's core.
    """
    if role == "center":
        return Gadget(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)), "star")
    # center is vertex 1
    return Gadget(leaves + 1, ((0, 1),) + tuple((1, i) for i in range(2, leaves + 1)), "star")


def random_bipartite_gadget(size: int, density: float, rng: random.Random) -> Gadget:
    """Random spanning tree plus extra edges between opposite color classes."""
    color = {0: 0}
    edges = set()
    for v in range(1, size):
        u = rng.randrange(v)
        color[v] = 1 - color[u]
        edges.add((u, v))
    for u in range(size):
        for v in range(u + 1, size):
            if color[u] != color[v] and (u, v) not in edges and rng.random() < density:
                edges.add((u, v))
    return Gadget(size, tuple(sorted(edges)), "random")


def _trim(g: Gadget, max_extra: int) -> Gadget:
    """Drop non-tree edges beyond ``max_extra`` (keeps the gadget connected)."""
    extra = len(g.edges) - (g.size - 1)
    if extra <= max_extra:
        return g
    tree, rest = _spanning_split(g)
    return Gadget(g.size, tuple(sorted(tree + rest[:max_extra])), g.kind)


def _spanning_split(g: Gadget):
    parent = list(range(g.size))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree, rest = [], []
    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            rest.append((u, v))
        else:
            parent[ru] = rv
            tree.append((u, v))
    return tree, rest


def _y_in_core(g: Gadget) -> bool:
    if g.size == 1:
        return True
    return 0 in core_corona_bipartite(Graph(g.size, g.edges)).core


def _draw_gadget(spec: GenSpec, rng: random.Random, budget: int) -> Gadget:
    """Draw one gadget with at most ``budget`` vertices."""
    cap = min(spec.max_size, budget)
    kind = rng.choice(spec.gadgets)
    if spec.force_non_ke:
        return _draw_core_gadget(kind, spec, rng, cap)
    size = rng.randint(min(spec.min_size, cap), cap)
    if kind == "singleton" or size == 1:
        return Gadget(1)
    if kind == "path":
        return path_gadget(size, rng.randrange(size))
    if kind == "star":
        return star_gadget(size - 1, rng.choice(("center", "leaf")))
    return random_bipartite_gadget(size, spec.edge_density, rng)


def _draw_core_gadget(kind: str, spec: GenSpec, rng: random.Random, cap: int) -> Gadget:
    """Gadget from the sub-library whose root y lies in core(D_y)."""
    lo = min(spec.min_size, cap)
    if kind == "path":
        sizes = [s for s in range(max(lo, 3), cap + 1) if s % 2 == 1]
        if sizes:
            return path_gadget(rng.choice(sizes), 0)
    elif kind == "star":
        if cap >= 4:
            return star_gadget(rng.randint(max(3, lo - 1), cap - 1), "leaf")
    elif kind == "random":
        # a single edge never has its root in the core
        if cap >= 3:
            for _ in range(REJECTION_BUDGET):
                g = random_bipartite_gadget(rng.randint(max(lo, 3), cap), spec.edge_density, rng)
                if _y_in_core(g):
                    return g
            raise GenerationError(f"no random gadget with y in its core after {REJECTION_BUDGET} draws; spec={spec.to_dict()}")
    return Gadget(1)


def _cycle_length(spec: GenSpec, rng: random.Random) -> int:
    if spec.cycle_len is not None:
        return spec.cycle_len
    top = spec.max_cycle_len if spec.max_n is None else min(spec.max_cycle_len, spec.max_n)
    return rng.choice(range(3, top + 1, 2))


def gen_almost_bipartite(spec: GenSpec) -> Generated:
    """Connected almost bipartite graph with its odd cycle and decomposition."""
    spec.validate()
    rng = random.Random(spec.seed)
    k = _cycle_length(spec, rng)
    budget = (spec.max_n if spec.max_n is not None else k * spec.max_size) - k
    gadgets = []
    for _ in range(k):
        g = _draw_gadget(spec, rng, budget + 1)
        budget -= g.size - 1
        gadgets.append(g)
    if spec.max_m is not None:
        gadgets = _fit_edges(gadgets, spec)
    out = assemble(k, gadgets, rng if spec.shuffle else None)
    return replace(out, spec=spec)


def _fit_edges(gadgets: list[Gadget], spec: GenSpec) -> list[Gadget]:
    """Trim non-spanning gadget edges so that m <= max_m.

    m = n + (number of non-tree gadget edges), so the spare room is max_m - n.
    """
    n = len(gadgets) + sum(g.size - 1 for g in gadgets)
    room = spec.max_m - n
    out = []
    for g in gadgets:
        t = _trim(g, max(room, 0))
        if spec.force_non_ke and not _y_in_core(t):
            t = Gadget(1)
        room -= len(t.edges) - (t.size - 1)
        out.append(t)
    return out


def gen_non_ke_almost_bipartite(spec: GenSpec) -> Generated:
    """Almost bipartite graph certified non-Konig-Egervary.

    Every gadget keeps its root in its own core, which forces alpha + mu = n - 1.
    """
    out = gen_almost_bipartite(replace(spec, force_non_ke=True))
    if is_ke(out.graph).ke:
        raise GenerationError(f"generated graph is Konig-Egervary; spec={spec.to_dict()}")
    return out


def gen_bipartite(n_left: int, n_right: int, density: float, seed: int) -> Graph:
    """Random bipartite graph; left side is ``0..n_left-1``. Not necessarily connected."""
    if n_left < 0 or n_right < 0:
        raise ValueError("side sizes must be non-negative")
    rng = random.Random(seed)
    edges = [(u, n_left + v) for u in range(n_left) for v in range(n_right) if rng.random() < density]
    return Graph(n_left + n_right, edges)


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p)."""
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def gen_mixed(seed: int, max_n: int) -> Graph:
    """One graph from a mix of classes: G(n, p), bipartite, almost bipartite, non-KE almost bipartite."""
    rng = random.Random(seed)
    kind = rng.randrange(4)
    sub = rng.getrandbits(64)
    if kind == 0:
        return gen_gnp(rng.randint(1, max_n), rng.uniform(0.05, 0.6), sub)
    if kind == 1:
        a = rng.randint(0, max_n)
        return gen_bipartite(a, rng.randint(0, max_n - a), rng.uniform(0.1, 0.7), sub)
    spec = GenSpec(max_n=max_n, max_size=max(1, max_n // 3), edge_density=rng.uniform(0.0, 0.6), seed=sub)
    if kind == 2:
        return gen_almost_bipartite(spec).graph
    return gen_non_ke_almost_bipartite(spec).graph

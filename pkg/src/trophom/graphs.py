"""Vertex-coloured graphs and the basic transformations everything else builds on.

A tropical graph is a finite, simple, loopless undirected graph together with
a total vertex colouring (not necessarily proper).  A homomorphism between
tropical graphs must preserve both edges and colours.  Colours are opaque
hashable tokens; builders use readable strings, solvers group them into
classes internally.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Optional, Sequence

Colour = Hashable
VertexMap = dict  # source vertex index -> target vertex index


class InputError(ValueError):
    """Malformed input: bad indices, missing colours, invalid maps."""


class PreconditionError(ValueError):
    """Well-formed input that violates an operation's stated precondition."""


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class TropicalGraph:
    """Immutable coloured graph on vertices 0..n-1."""

    n: int
    edges: frozenset
    colours: tuple

    def __post_init__(self):
        if self.n < 0:
            raise InputError("vertex count must be nonnegative")
        if len(self.colours) != self.n:
            raise InputError(
                f"expected {self.n} colours, got {len(self.colours)}")
        for e in self.edges:
            u, v = e
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise InputError(f"edge {e} out of range or not normalized")

    # Adjacency and colour classes are cached on first use; the instance
    # stays hashable/equal on its declared fields only.
    @property
    def adjacency(self) -> tuple:
        adj = self.__dict__.get("_adj")
        if adj is None:
            sets = [set() for _ in range(self.n)]
            for u, v in self.edges:
                sets[u].add(v)
                sets[v].add(u)
            adj = tuple(frozenset(s) for s in sets)
            object.__setattr__(self, "_adj", adj)
        return adj

    def neighbours(self, v: int) -> tuple:
        return tuple(sorted(self.adjacency[v]))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def colour_of(self, v: int) -> Colour:
        return self.colours[v]

    def colour_classes(self) -> dict:
        """Map colour token -> sorted tuple of vertices wearing it."""
        classes = self.__dict__.get("_classes")
        if classes is None:
            grouped: dict = {}
            for v, c in enumerate(self.colours):
                grouped.setdefault(c, []).append(v)
            classes = {c: tuple(vs) for c, vs in grouped.items()}
            object.__setattr__(self, "_classes", classes)
        return classes

    def induced(self, vertices: Iterable[int]) -> tuple["TropicalGraph", tuple]:
        """Induced subgraph on the given vertices (ascending original order).

        Returns the subgraph plus the tuple mapping new index -> old index.
        """
        old = tuple(sorted(set(vertices)))
        for v in old:
            if not 0 <= v < self.n:
                raise InputError(f"vertex {v} out of range")
        pos = {v: i for i, v in enumerate(old)}
        edges = frozenset(
            (pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos)
        sub = TropicalGraph(len(old), edges,
                            tuple(self.colours[v] for v in old))
        return sub, old

    def recoloured(self, colours: Sequence[Colour]) -> "TropicalGraph":
        return TropicalGraph(self.n, self.edges, tuple(colours))


def tgraph(n: int, edges: Iterable, colours) -> TropicalGraph:
    """Build a TropicalGraph, normalizing edges and accepting colour
    sequences or vertex->colour mappings."""
    norm = set()
    for u, v in edges:
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        norm.add(_norm_edge(u, v))
    if isinstance(colours, Mapping):
        try:
            seq = tuple(colours[v] for v in range(n))
        except KeyError as e:
            raise InputError(f"vertex {e.args[0]} uncoloured") from None
    else:
        seq = tuple(colours)
    return TropicalGraph(n, frozenset(norm), seq)


def plain(n: int, edges: Iterable, colour: Colour = "Black") -> TropicalGraph:
    """A monochromatic graph; the 'uncoloured' case for plain-graph problems."""
    return tgraph(n, edges, [colour] * n)


def path_graph(colours: Sequence[Colour]) -> TropicalGraph:
    """Path on len(colours) vertices, coloured in order."""
    n = len(colours)
    return tgraph(n, [(i, i + 1) for i in range(n - 1)], colours)


def cycle_graph(colours: Sequence[Colour]) -> TropicalGraph:
    """Cycle on len(colours) >= 3 vertices, coloured in cyclic order."""
    n = len(colours)
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return tgraph(n, edges, colours)


@dataclass(frozen=True)
class Digraph:
    """Immutable loopless directed graph on vertices 0..n-1."""

    n: int
    arcs: frozenset

    def __post_init__(self):
        for a in self.arcs:
            u, v = a
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"arc {a} out of range")

    @property
    def out_adjacency(self) -> tuple:
        adj = self.__dict__.get("_out")
        if adj is None:
            sets = [set() for _ in range(self.n)]
            for u, v in self.arcs:
                sets[u].add(v)
            adj = tuple(frozenset(s) for s in sets)
            object.__setattr__(self, "_out", adj)
        return adj

    @property
    def in_adjacency(self) -> tuple:
        adj = self.__dict__.get("_in")
        if adj is None:
            sets = [set() for _ in range(self.n)]
            for u, v in self.arcs:
                sets[v].add(u)
            adj = tuple(frozenset(s) for s in sets)
            object.__setattr__(self, "_in", adj)
        return adj


def dgraph(n: int, arcs: Iterable) -> Digraph:
    return Digraph(n, frozenset((u, v) for u, v in arcs))


@dataclass(frozen=True)
class Bipartition:
    part_a: frozenset
    part_b: frozenset


def validate_hom(source: TropicalGraph, target: TropicalGraph,
                 mapping: Mapping) -> bool:
    """True iff mapping is a total colour- and edge-preserving homomorphism.

    Raises InputError when the map is not total on the source or uses an
    out-of-range image.
    """
    for v in range(source.n):
        if v not in mapping:
            raise InputError(f"map undefined on vertex {v}")
        img = mapping[v]
        if not 0 <= img < target.n:
            raise InputError(f"image {img} of vertex {v} out of range")
    for v in range(source.n):
        if source.colours[v] != target.colours[mapping[v]]:
            return False
    for u, v in source.edges:
        if not target.has_edge(mapping[u], mapping[v]):
            return False
    return True


def connected_components(g: TropicalGraph) -> list:
    """Maximal connected induced subgraphs, each with its new->old index map.

    Components are emitted in order of their smallest vertex; vertex order
    within a component follows the original indices.
    """
    seen = [False] * g.n
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = []
        queue = deque([start])
        seen[start] = True
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        out.append(g.induced(comp))
    return out


def bipartition(g: TropicalGraph) -> Optional[Bipartition]:
    """A two-sided partition with every edge crossing, or None on odd cycles.

    Per connected component the side holding the component's smallest vertex
    goes into part A, which makes the result deterministic.
    """
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] != -1:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    a = frozenset(v for v in range(g.n) if side[v] == 0)
    b = frozenset(v for v in range(g.n) if side[v] == 1)
    return Bipartition(a, b)


def _require_connected_bipartite(g: TropicalGraph) -> Bipartition:
    if g.n and len(connected_components(g)) != 1:
        raise PreconditionError("graph must be connected")
    bip = bipartition(g)
    if bip is None:
        raise PreconditionError("graph must be bipartite")
    return bip


def split_colours(target: TropicalGraph) -> TropicalGraph:
    """Recolour a connected bipartite graph so the two sides use disjoint
    palettes: colour c becomes (c, sideBit), bit 0 on the side of vertex 0."""
    bip = _require_connected_bipartite(target)
    bits = {v: 0 for v in bip.part_a}
    bits.update({v: 1 for v in bip.part_b})
    return target.recoloured(
        tuple((target.colours[v], bits[v]) for v in range(target.n)))


def split_instance(source: TropicalGraph) -> tuple:
    """The two side-bit colourings of a connected bipartite source.

    Solving either against split_colours(target) is equivalent to solving
    the original instance against the target.
    """
    bip = _require_connected_bipartite(source)
    bits = {v: 0 for v in bip.part_a}
    bits.update({v: 1 for v in bip.part_b})
    first = source.recoloured(
        tuple((source.colours[v], bits[v]) for v in range(source.n)))
    second = source.recoloured(
        tuple((source.colours[v], 1 - bits[v]) for v in range(source.n)))
    return first, second

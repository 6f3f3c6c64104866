"""Mechanical builders for the reduction gadgets.

Everything here is a deterministic constructor returning a GadgetGraph:
a coloured graph plus a label -> vertex dictionary for the handful of
vertices that later wiring or verification needs to point at.

The oriented-path conventions: a P-piece is a coloured path whose single
marked (Red) interior vertex sits strictly closer to one end, which gives
the piece an orientation; a Q-piece has the mark equidistant from both
ends and is symmetric.  Arrows in the construction comments mean P-pieces,
plain dashes mean Q-pieces.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Optional, Sequence

from .graphs import (Colour, Digraph, InputError, TropicalGraph,
                     bipartition, connected_components, tgraph)


@dataclass(frozen=True)
class CnfFormula:
    """Clauses are tuples of literals; a literal is (variable, polarity)."""

    n_vars: int
    clauses: tuple

    def __post_init__(self):
        for cl in self.clauses:
            if not cl:
                raise InputError("empty clause")
            for var, _pol in cl:
                if not 0 <= var < self.n_vars:
                    raise InputError(f"variable {var} out of range")


@dataclass(frozen=True)
class NaeFormula:
    """Not-all-equal clauses: 3-tuples of pairwise distinct variables,
    no negation."""

    n_vars: int
    clauses: tuple

    def __post_init__(self):
        for cl in self.clauses:
            if len(cl) != 3 or len(set(cl)) != 3:
                raise InputError(
                    "clauses need three pairwise distinct variables")
            for var in cl:
                if not 0 <= var < self.n_vars:
                    raise InputError(f"variable {var} out of range")


def nae_formula(n_vars: int, clauses) -> NaeFormula:
    return NaeFormula(n_vars, tuple(tuple(cl) for cl in clauses))


def cnf_formula(n_vars: int, clauses) -> CnfFormula:
    return CnfFormula(n_vars,
                      tuple(tuple(tuple(lit) for lit in cl) for cl in clauses))


@dataclass(frozen=True)
class GadgetGraph:
    graph: TropicalGraph
    names: Mapping

    def __getitem__(self, label: str) -> int:
        return self.names[label]


class _Builder:
    """Incremental graph assembly with named vertices."""

    def __init__(self):
        self.colours: list = []
        self.edges: set = set()
        self.names: dict = {}

    def add(self, colour: Colour, name: Optional[str] = None) -> int:
        idx = len(self.colours)
        self.colours.append(colour)
        if name is not None:
            if name in self.names:
                raise InputError(f"duplicate vertex name {name!r}")
            self.names[name] = idx
        return idx

    def edge(self, u: int, v: int):
        if u == v:
            raise InputError("builder refuses self-loops")
        self.edges.add((u, v) if u < v else (v, u))

    def weave(self, colours: Sequence[Colour], start: Optional[int] = None,
              end: Optional[int] = None) -> list:
        """Add a path; start/end, when given, reuse existing vertices whose
        colour must match the sequence ends.  Returns all path indices."""
        idxs = []
        for pos, c in enumerate(colours):
            if pos == 0 and start is not None:
                if self.colours[start] != c:
                    raise InputError("path start colour mismatch")
                idxs.append(start)
                continue
            if pos == len(colours) - 1 and end is not None:
                if self.colours[end] != c:
                    raise InputError("path end colour mismatch")
                idxs.append(end)
            else:
                idxs.append(self.add(c))
        for a, b in zip(idxs, idxs[1:]):
            self.edge(a, b)
        return idxs

    def build(self) -> GadgetGraph:
        g = tgraph(len(self.colours), self.edges, tuple(self.colours))
        return GadgetGraph(g, dict(self.names))


# ---------------------------------------------------------------------------
# digraphs -> 3-coloured graphs


def tropicalize_digraph(d: Digraph) -> TropicalGraph:
    """Replace every arc (u, v) by a path u - x_u - x_v - v with x_u Red and
    x_v Green; original vertices turn Blue.  Homomorphism existence between
    digraphs and between their images coincide."""
    b = _Builder()
    for v in range(d.n):
        b.add("Blue", name=f"v{v}")
    for u, v in sorted(d.arcs):
        xu = b.add("Red")
        xv = b.add("Green")
        b.edge(u, xu)
        b.edge(xu, xv)
        b.edge(xv, v)
    return b.build().graph


# ---------------------------------------------------------------------------
# P- and Q-pieces and the long-cycle target


PALETTES = ("four", "three", "two")


def _mark_colour(palette: str) -> Colour:
    # Remark-style variants: the three-colour palette paints marks Blue,
    # the experimental two-colour palette distinguishes marked/plain only.
    if palette == "four":
        return "R"
    if palette == "three":
        return "B"
    return "m"


def _pq_colours(kind: str, start: Colour, end: Colour, palette: str,
                extra: int = 0) -> list:
    """Colour sequence of a P- or Q-piece.

    P keeps its mark at distance 5 + extra from the start and 3 from the
    end, so lengthening preserves the asymmetry; Q splits the extra evenly
    and stays symmetric (extra must be even for Q).  The two-colour palette
    doubles the mark (one copy per side) and then identifies {G, B, mark}
    as 'm' and Yellow as 'y'.
    """
    if palette not in PALETTES:
        raise InputError(f"unknown palette {palette!r}")
    if kind not in ("P", "Q"):
        raise InputError(f"unknown path kind {kind!r}")
    if {start, end} != {"G", "B"}:
        raise InputError("piece ends must be one Green and one Blue")
    if extra < 0 or extra % 2:
        raise InputError("length extension must be even and nonnegative")
    mark = _mark_colour(palette)
    if palette == "two":
        marks = [mark, mark]
    else:
        marks = [mark]
    if kind == "P":
        seq = [start] + ["Y"] * (4 + extra) + marks + ["Y"] * 2 + [end]
    else:
        half = 4 + extra // 2
        seq = [start] + ["Y"] * half + marks + ["Y"] * half + [end]
    if palette == "two":
        seq = ["m" if c in ("G", "B", "m") else "y" for c in seq]
    return seq


def build_pq_path(kind: str, start_colour: Colour, end_colour: Colour,
                  palette: str = "four", extra: int = 0) -> GadgetGraph:
    """A standalone oriented (P) or symmetric (Q) piece; names the two ends."""
    seq = _pq_colours(kind, start_colour, end_colour, palette, extra)
    b = _Builder()
    idxs = b.weave(seq)
    b.names["start"] = idxs[0]
    b.names["end"] = idxs[-1]
    return b.build()


def _base_arc_length(palette: str) -> int:
    return 9 if palette == "two" else 8


def _min_half_order(palette: str) -> int:
    # Smallest k with C_{2k} expressible as six equal arcs of the base
    # length: 24 for the standard palettes, 27 for the two-colour variant.
    return 27 if palette == "two" else 24


# Order in which pairs of extra vertices land on the six cycle arcs.  The
# folding mappings reuse arcs 0 and 1, so those lengthen last and the arc
# at position 3 never ends up shorter than position 1.
_EXTRA_ORDER = (2, 4, 5, 0, 3, 1)


def _arc_extras(palette: str, k: int) -> list:
    k0 = _min_half_order(palette)
    if k < k0:
        raise InputError(f"cycle half-order must be at least {k0}")
    units = k - k0
    extras = [0] * 6
    for i in range(units):
        extras[_EXTRA_ORDER[i % 6]] += 2
    return extras


_CYCLE_NAMES = ("g0", "b0", "g1", "b1", "g2", "b2")


def build_c48(palette: str = "four", k: int = 24) -> GadgetGraph:
    """The 2k-cycle target: six corner vertices g0 b0 g1 b1 g2 b2 joined by
    oriented P-pieces, every corner arc pointing forward around the cycle."""
    extras = _arc_extras(palette, k)
    b = _Builder()
    corner_colour = {"g": "G", "b": "B"} if palette != "two" else \
        {"g": "m", "b": "m"}
    corners = [b.add(corner_colour[name[0]], name=name)
               for name in _CYCLE_NAMES]
    for i in range(6):
        u = corners[i]
        v = corners[(i + 1) % 6]
        seq = _pq_colours("P", "G" if i % 2 == 0 else "B",
                          "B" if i % 2 == 0 else "G", palette, extras[i])
        b.weave(seq, start=u, end=v)
    out = b.build()
    assert out.graph.n == 2 * k, (out.graph.n, k)
    return out


def _pair_label(i: int, j: int) -> str:
    a, b = min(i, j), max(i, j)
    return f"x{a}x{b}"


def build_pair_gadget(i: int, j: int, palette: str = "four", k: int = 24,
                      builder: Optional[_Builder] = None,
                      shared: Optional[int] = None) -> GadgetGraph:
    """The per-pair six-cycle: U_G -P> b0 -P> g1 -Q- b1 -P> g2 -Q- b2 -Q- U_G.

    Maps onto the target either around the whole cycle (sigma) or folded
    onto its first two arcs (rho); those are the only options once U_G is
    pinned, which is what encodes 'same part or different parts'.
    """
    extras = _arc_extras(palette, k)
    own = builder is None
    b = _Builder() if own else builder
    gc = "G" if palette != "two" else "m"
    bc = "B" if palette != "two" else "m"
    ug = b.add(gc, name="U_G") if shared is None else shared
    lab = _pair_label(i, j)
    b0 = b.add(bc, name=f"b0_{lab}")
    g1 = b.add(gc, name=f"g1_{lab}")
    b1 = b.add(bc, name=f"b1_{lab}")
    g2 = b.add(gc, name=f"g2_{lab}")
    b2 = b.add(bc, name=f"b2_{lab}")
    # A Q-piece reaches its mark after half its length, so to fold into a
    # lengthened arc that half must dominate the arc extras of both its
    # around-the-cycle and its folded image and keep their (even) parity:
    # extra 2*max covers the two arcs each Q may land on.
    q_extras = _pair_q_extras(extras)
    b.weave(_pq_colours("P", "G", "B", palette, extras[0]), start=ug, end=b0)
    b.weave(_pq_colours("P", "B", "G", palette, extras[1]), start=b0, end=g1)
    b.weave(_pq_colours("Q", "G", "B", palette, q_extras[0]),
            start=g1, end=b1)
    b.weave(_pq_colours("P", "B", "G", palette, extras[3]), start=b1, end=g2)
    b.weave(_pq_colours("Q", "G", "B", palette, q_extras[1]),
            start=g2, end=b2)
    b.weave(_pq_colours("Q", "B", "G", palette, q_extras[2]),
            start=b2, end=ug)
    return b.build() if own else None


def _pair_q_extras(extras) -> tuple:
    return (2 * max(extras[2], extras[1]),
            2 * max(extras[4], extras[1]),
            2 * max(extras[5], extras[0]))


def _connector_tree(b: _Builder, beta1: int, beta2: int, beta3: int,
                    palette: str, emax: int, tag: str):
    """Tree gluing one b1-corner to two b2-corners of sibling pairs:
    beta1 -Q- gamma0 -Q- beta2, with gamma1 -P> beta0 -P> gamma0 hanging
    off the centre and beta3 -Q- gamma1."""
    gc = "G" if palette != "two" else "m"
    bc = "B" if palette != "two" else "m"
    gamma0 = b.add(gc, name=f"t{tag}_g0")
    beta0 = b.add(bc, name=f"t{tag}_b0")
    gamma1 = b.add(gc, name=f"t{tag}_g1")
    b.weave(_pq_colours("Q", "B", "G", palette, 2 * emax),
            start=beta1, end=gamma0)
    b.weave(_pq_colours("Q", "G", "B", palette, 2 * emax),
            start=gamma0, end=beta2)
    b.weave(_pq_colours("P", "B", "G", palette, emax), start=beta0, end=gamma0)
    b.weave(_pq_colours("P", "G", "B", palette, emax), start=gamma1, end=beta0)
    b.weave(_pq_colours("Q", "G", "B", palette, 2 * emax),
            start=gamma1, end=beta3)


def build_triple_gadget(p: int, q: int, r: int, palette: str = "four",
                        k: int = 24) -> GadgetGraph:
    """Three pair gadgets on {p,q,r} plus the three connector trees that
    force an odd number of them to fold."""
    b = _Builder()
    gc = "G" if palette != "two" else "m"
    ug = b.add(gc, name="U_G")
    for i, j in ((p, q), (p, r), (q, r)):
        build_pair_gadget(i, j, palette, k, builder=b, shared=ug)
    _wire_triple(b, p, q, r, palette, k)
    return b.build()


def _wire_triple(b: _Builder, p: int, q: int, r: int, palette: str, k: int):
    emax = max(_arc_extras(palette, k))
    pq, pr, qr = _pair_label(p, q), _pair_label(p, r), _pair_label(q, r)
    trees = (
        (f"b1_{pq}", f"b2_{pr}", f"b2_{qr}"),
        (f"b1_{pr}", f"b2_{qr}", f"b2_{pq}"),
        (f"b1_{qr}", f"b2_{pq}", f"b2_{pr}"),
    )
    for t, (n1, n2, n3) in enumerate(trees):
        _connector_tree(b, b.names[n1], b.names[n2], b.names[n3],
                        palette, emax, tag=f"{pq}.{pr}.{qr}.{t}")


def nae3sat_to_c48(f: NaeFormula, palette: str = "four",
                   k: int = 24) -> GadgetGraph:
    """Instance graph for the not-all-equal reduction against build_c48.

    One shared U_G; a pair gadget per unordered variable pair; three
    connector trees per unordered triple; and per clause (l1, l2, l3) a
    blocking path b1 of {l1,l2} -P> G -P> B -P> G -Q- b2 of {l2,l3} that
    rules out folding all three clause pairs at once.
    """
    extras = _arc_extras(palette, k)
    emax = max(extras)
    b = _Builder()
    gc = "G" if palette != "two" else "m"
    bc = "B" if palette != "two" else "m"
    ug = b.add(gc, name="U_G")
    for i, j in combinations(range(f.n_vars), 2):
        build_pair_gadget(i, j, palette, k, builder=b, shared=ug)
    for p, q, r in combinations(range(f.n_vars), 3):
        _wire_triple(b, p, q, r, palette, k)
    for ci, (l1, l2, l3) in enumerate(f.clauses):
        left = b.names[f"b1_{_pair_label(l1, l2)}"]
        right = b.names[f"b2_{_pair_label(l2, l3)}"]
        ga = b.add(gc, name=f"c{ci}_g0")
        bb = b.add(bc, name=f"c{ci}_b0")
        gcv = b.add(gc, name=f"c{ci}_g1")
        b.weave(_pq_colours("P", "B", "G", palette, emax), start=left, end=ga)
        b.weave(_pq_colours("P", "G", "B", palette, emax), start=ga, end=bb)
        b.weave(_pq_colours("P", "B", "G", palette, emax), start=bb, end=gcv)
        b.weave(_pq_colours("Q", "G", "B", palette, 2 * emax),
                start=gcv, end=right)
    out = b.build()

    v = f.n_vars
    n_pairs = v * (v - 1) // 2
    n_triples = v * (v - 1) * (v - 2) // 6
    base = _base_arc_length(palette)
    # internals per piece: P holds base-1+extra vertices, Q holds base+1+extra
    per_pair = (5 + 3 * (base - 1) + extras[0] + extras[1] + extras[3]
                + 3 * (base + 1) + sum(_pair_q_extras(extras)))
    per_tree = 3 + 2 * (base - 1 + emax) + 3 * (base + 1 + 2 * emax)
    per_clause = 3 + 3 * (base - 1 + emax) + (base + 1 + 2 * emax)
    expected = (1 + n_pairs * per_pair + n_triples * 3 * per_tree
                + len(f.clauses) * per_clause)
    assert out.graph.n == expected, (out.graph.n, expected)
    return out


# ---------------------------------------------------------------------------
# the 9-vertex pendant target and its list-homomorphism reduction


H9_CYCLE = ("1", "2", "3", "4", "5", "6")


def build_h9() -> GadgetGraph:
    """Six-cycle labelled 1..6, all Black, with a Red pendant at 1, Green
    at 3 and Yellow at 5; it is a core and its problem absorbs list
    homomorphism on the six-cycle."""
    b = _Builder()
    ring = [b.add("Black", name=lbl) for lbl in H9_CYCLE]
    for i in range(6):
        b.edge(ring[i], ring[(i + 1) % 6])
    for lbl, colour, name in (("1", "Red", "red"), ("3", "Green", "green"),
                              ("5", "Yellow", "yellow")):
        leaf = b.add(colour, name=name)
        b.edge(b.names[lbl], leaf)
    return b.build()


# Gadget catalogue keyed by the list contents over cycle labels 1..6.
# Each entry describes pendant paths: a sequence of colour strings, attached
# to the source copy at the path's first vertex.
_H9_GADGETS = {
    frozenset({1}): (("Red",),),
    frozenset({3}): (("Green",),),
    frozenset({5}): (("Yellow",),),
    frozenset({2}): (("Black", "Red"), ("Black", "Green")),
    frozenset({4}): (("Black", "Green"), ("Black", "Yellow")),
    frozenset({6}): (("Black", "Yellow"), ("Black", "Red")),
    frozenset({2, 4}): (("Black", "Green"),),
    frozenset({4, 6}): (("Black", "Yellow"),),
    frozenset({2, 6}): (("Black", "Red"),),
    frozenset({1, 3}): ("MIDDLE", ("Red", "Black", "Black", "Black", "Green")),
    frozenset({3, 5}): ("MIDDLE",
                        ("Green", "Black", "Black", "Black", "Yellow")),
    frozenset({1, 5}): ("MIDDLE",
                        ("Yellow", "Black", "Black", "Black", "Red")),
    frozenset({1, 3, 5}): (("Black", "Black", "Red"),),
    frozenset({2, 4, 6}): (("Black", "Black", "Black", "Red"),),
}


def c6_listhom_to_h9(source: TropicalGraph, lists: Mapping) -> GadgetGraph:
    """Attach a per-vertex gadget encoding its list over the cycle labels.

    Lists must be parity-pure subsets of {1,3,5} or {2,4,6} drawn from the
    fixed catalogue of shapes; the source must be bipartite.  The result
    maps to the pendant 9-vertex target exactly when the original list
    instance maps to the six-cycle.
    """
    if bipartition(source) is None:
        raise InputError("source must be bipartite")
    b = _Builder()
    copies = [b.add("Black", name=f"v{v}") for v in range(source.n)]
    for u, v in sorted(source.edges):
        b.edge(copies[u], copies[v])
    for v in range(source.n):
        if v not in lists:
            raise InputError(f"vertex {v} has no list")
        lst = frozenset(lists[v])
        if not lst or not (lst <= {1, 3, 5} or lst <= {2, 4, 6}):
            raise InputError(
                f"list {sorted(lst)} of vertex {v} is not parity-pure")
        spec = _H9_GADGETS.get(lst)
        if spec is None:
            raise InputError(
                f"list {sorted(lst)} of vertex {v} has no gadget shape")
        if spec[0] == "MIDDLE":
            colours = spec[1]
            idxs = b.weave(colours)
            b.edge(idxs[len(idxs) // 2], copies[v])
        else:
            for colours in spec:
                idxs = b.weave(colours)
                b.edge(idxs[0], copies[v])
    return b.build()


# ---------------------------------------------------------------------------
# zig-zag pieces for the retraction-to-2-colours step


def _runs_colours(n_runs: int, last: Colour, short_at: Optional[int]) -> list:
    """White endpoint run, alternating interior runs of length four (the
    short_at-th interior run, if any, has length two), then the last run."""
    seq = ["W"]
    colour = "B"
    for t in range(1, n_runs - 1):
        ln = 2 if t == short_at else 4
        seq.extend([colour] * ln)
        colour = "W" if colour == "B" else "B"
    seq.append(last)
    return seq


def zigzag_p(l: int, i: Optional[int] = None) -> TropicalGraph:
    """The path P (i None) or P_i over l runs, l odd >= 3; its rightmost
    vertex is the attachment point."""
    if l < 3 or l % 2 == 0:
        raise InputError("l must be odd and at least 3")
    if i is not None and not 1 <= i <= l - 2:
        raise InputError(f"i must lie in 1..{l - 2}")
    seq = _runs_colours(l, "W", i)
    return tgraph(len(seq), [(a, a + 1) for a in range(len(seq) - 1)], seq)


def zigzag_q(k: int, j: Optional[int] = None) -> TropicalGraph:
    """The path Q (j None) or Q_j over k runs, k even >= 4; its leftmost
    vertex is the attachment point."""
    if k < 4 or k % 2 == 1:
        raise InputError("k must be even and at least 4")
    if j is not None and not 1 <= j <= k - 2:
        raise InputError(f"j must lie in 1..{k - 2}")
    seq = _runs_colours(k, "B", j)
    return tgraph(len(seq), [(a, a + 1) for a in range(len(seq) - 1)], seq)


def forcing_path(m: int, last: Colour) -> TropicalGraph:
    """Two-colour forcing path: single-W run, m - 2 interior runs of length
    two, and a final run of length one coloured `last`."""
    seq = ["W"]
    colour = "B"
    for _ in range(m - 2):
        seq.extend([colour] * 2)
        colour = "W" if colour == "B" else "B"
    seq.append(last)
    return tgraph(len(seq), [(a, a + 1) for a in range(len(seq) - 1)], seq)


def zigzag_parameters(n_a: int, n_b: int) -> tuple:
    """Smallest usable run counts: odd l with l - 2 >= n_a and even k with
    k - 2 >= n_b, so an indexed piece exists for every attachment."""
    l = n_a + 2 if n_a % 2 else n_a + 3
    k = n_b + 2 if n_b % 2 == 0 else n_b + 3
    return max(l, 3), max(k, 4)


def _attach_path(b: _Builder, colours: Sequence[Colour], anchor: int,
                 anchor_pos: int):
    """Weave a path identifying colours[anchor_pos] with an existing vertex."""
    if anchor_pos == len(colours) - 1:
        b.weave(colours, end=anchor)
    elif anchor_pos == 0:
        b.weave(colours, start=anchor)
    else:
        raise InputError("anchor must be a path end")


def build_zigzag_gadget(h: TropicalGraph,
                        parts: Optional[tuple] = None) -> GadgetGraph:
    """Two-colour the bipartite graph h so that retraction onto it and
    tropical homomorphism to the result are interchangeable: every original
    vertex turns White, side-A vertex number i gets a P_i tail glued at its
    rightmost vertex, side-B vertex number j a Q_j tail glued at its
    leftmost vertex."""
    bip = bipartition(h)
    if bip is None:
        raise InputError("h must be bipartite")
    if parts is None:
        parts = (tuple(sorted(bip.part_a)), tuple(sorted(bip.part_b)))
    side_a, side_b = parts
    l, k = zigzag_parameters(len(side_a), len(side_b))
    b = _Builder()
    for v in range(h.n):
        b.add("W", name=f"h{v}")
    for u, v in sorted(h.edges):
        b.edge(u, v)
    for i, a in enumerate(side_a, start=1):
        colours = [c for c in _runs_colours(l, "W", i)]
        _attach_path(b, colours, b.names[f"h{a}"], len(colours) - 1)
        b.names[f"a{i}"] = b.names[f"h{a}"]
    for j, bb in enumerate(side_b, start=1):
        colours = [c for c in _runs_colours(k, "B", j)]
        _attach_path(b, colours, b.names[f"h{bb}"], 0)
        b.names[f"b{j}"] = b.names[f"h{bb}"]
    return b.build()


def transform_retraction_instance(g: TropicalGraph, h: TropicalGraph,
                                  embedding: Mapping) -> GadgetGraph:
    """Rewrite a retraction instance (g contains a designated copy of h)
    into a two-colour homomorphism instance against build_zigzag_gadget(h).

    Every g vertex turns White; the embedded copy receives the same P_i and
    Q_j tails as the target; every other vertex on the A side receives a
    full P tail at the P's rightmost vertex.
    """
    if bipartition(g) is None or len(connected_components(g)) != 1:
        raise InputError("g must be connected and bipartite")
    copy = {}
    for t in range(h.n):
        if t not in embedding:
            raise InputError(f"embedding undefined on vertex {t}")
        if embedding[t] in copy.values():
            raise InputError("embedding is not injective")
        copy[t] = embedding[t]
    for a, bb in h.edges:
        if not g.has_edge(copy[a], copy[bb]):
            raise InputError("designated copy is missing an edge")

    hbip = bipartition(h)
    if hbip is None:
        raise InputError("h must be bipartite")
    side_a = tuple(sorted(hbip.part_a))
    side_b = tuple(sorted(hbip.part_b))
    l, k = zigzag_parameters(len(side_a), len(side_b))

    gbip = bipartition(g)
    # A' is the g-side holding the embedded copy of side A.
    if side_a:
        probe = copy[side_a[0]]
        part_a = gbip.part_a if probe in gbip.part_a else gbip.part_b
    else:
        part_a = gbip.part_a
    for a in side_a:
        if copy[a] not in part_a:
            raise InputError("embedding does not respect the bipartition")
    for bb in side_b:
        if copy[bb] in part_a:
            raise InputError("embedding does not respect the bipartition")

    b = _Builder()
    for v in range(g.n):
        b.add("W", name=f"g{v}")
    for u, v in sorted(g.edges):
        b.edge(u, v)
    for i, a in enumerate(side_a, start=1):
        colours = _runs_colours(l, "W", i)
        _attach_path(b, colours, copy[a], len(colours) - 1)
    for j, bb in enumerate(side_b, start=1):
        colours = _runs_colours(k, "B", j)
        _attach_path(b, colours, copy[bb], 0)
    embedded_a = {copy[a] for a in side_a}
    for v in sorted(part_a - embedded_a):
        colours = _runs_colours(l, "W", None)
        _attach_path(b, colours, v, len(colours) - 1)
    return b.build()


# ---------------------------------------------------------------------------
# the tree building blocks


_S_BLOCK_KINDS = {
    "S12": {"x4_leaf": "GreenDot", "x26_leaf": "RedDot"},
    "S1T": {"x4_leaf": "RedCross", "x26_leaf": "RedDot"},
    "S2T": {"x4_leaf": "GreenCross", "x26_leaf": "GreenDot"},
}


def build_s_block(kind: str) -> GadgetGraph:
    """Twelve-vertex tree block: a seven-vertex Black path x1..x7 with
    BlackCross leaves at x1 and x7, matching Dot leaves at x2 and x6, and
    the kind's distinguishing leaf at x4."""
    spec = _S_BLOCK_KINDS.get(kind.upper().replace("_", "").replace(",", ""))
    if spec is None:
        raise InputError(f"unknown block kind {kind!r}; "
                         f"expected one of {sorted(_S_BLOCK_KINDS)}")
    b = _Builder()
    spine = [b.add("Black", name=f"x{i}") for i in range(1, 8)]
    for u, v in zip(spine, spine[1:]):
        b.edge(u, v)
    for pos, name in ((0, "cross1"), (6, "cross7")):
        leaf = b.add("BlackCross", name=name)
        b.edge(spine[pos], leaf)
    for pos, name in ((1, "dot2"), (5, "dot6")):
        leaf = b.add(spec["x26_leaf"], name=name)
        b.edge(spine[pos], leaf)
    leaf = b.add(spec["x4_leaf"], name="mid4")
    b.edge(spine[3], leaf)
    return b.build()

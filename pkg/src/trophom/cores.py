"""Cores of coloured graphs: retract search, core computation, isomorphism.

The core is the unique (up to colour-preserving isomorphism) smallest
induced subgraph the graph maps onto.  Everything here is exact and
oracle-grade: retract search is exponential in the worst case and meant
for targets up to a few dozen vertices, not for production-sized graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import TropicalGraph
from .solver import colour_lists, solve_list_hom


def find_proper_retract(g: TropicalGraph,
                        candidate_order: Optional[Sequence[int]] = None):
    """A colour-preserving endomorphism of g with a strictly smaller image,
    or None when g is a core.

    Tries each vertex-deleted induced subgraph as a landing zone, smallest
    deleted index first (candidate_order overrides, for tests only).
    """
    if candidate_order is None:
        order = range(g.n)
    else:
        order = [v for v in candidate_order if 0 <= v < g.n]
    for v in order:
        keep = [u for u in range(g.n) if u != v]
        sub, old = g.induced(keep)
        out = solve_list_hom(g, sub, colour_lists(g, sub))
        if out.solvable:
            return {u: old[out.witness[u]] for u in range(g.n)}
    return None


def is_core(g: TropicalGraph) -> bool:
    return find_proper_retract(g) is None


@dataclass(frozen=True)
class CoreResult:
    """The core as an induced subgraph plus the witnessing homomorphism."""

    graph: TropicalGraph
    retained: tuple          # core index -> original vertex index
    hom: dict                # original vertex index -> core index


def core(g: TropicalGraph,
         candidate_order: Optional[Sequence[int]] = None) -> CoreResult:
    """Retract repeatedly until no proper retract remains."""
    current = g
    retained = tuple(range(g.n))
    hom = {v: v for v in range(g.n)}
    while True:
        retract = find_proper_retract(current, candidate_order)
        if retract is None:
            return CoreResult(current, retained, hom)
        image = sorted(set(retract.values()))
        assert len(image) < current.n, "retract must shrink the image"
        current, old = current.induced(image)
        pos = {o: i for i, o in enumerate(old)}
        retained = tuple(retained[o] for o in old)
        hom = {v: pos[retract[cur]] for v, cur in hom.items()}


def iso_check(g1: TropicalGraph, g2: TropicalGraph) -> bool:
    """Colour-preserving graph isomorphism decision (exact, small inputs)."""
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return False
    profile1 = sorted((repr(g1.colours[v]), g1.degree(v)) for v in range(g1.n))
    profile2 = sorted((repr(g2.colours[v]), g2.degree(v)) for v in range(g2.n))
    if profile1 != profile2:
        return False

    # An injective edge- and colour-preserving bijection with equal edge
    # counts hits every g2 edge, so its inverse preserves edges too.
    candidates = []
    for v in range(g1.n):
        cands = [w for w in range(g2.n)
                 if g2.colours[w] == g1.colours[v]
                 and g2.degree(w) == g1.degree(v)]
        if not cands:
            return False
        candidates.append(cands)

    order = sorted(range(g1.n), key=lambda v: len(candidates[v]))
    assigned: dict = {}
    used = set()

    def extend(k: int) -> bool:
        if k == g1.n:
            return True
        v = order[k]
        for w in candidates[v]:
            if w in used:
                continue
            ok = True
            for u in g1.adjacency[v]:
                if u in assigned and not g2.has_edge(assigned[u], w):
                    ok = False
                    break
            if ok:
                for u in assigned:
                    # non-edges must stay non-edges for a bijection to invert
                    if not g1.has_edge(v, u) and g2.has_edge(w, assigned[u]):
                        ok = False
                        break
            if ok:
                assigned[v] = w
                used.add(w)
                if extend(k + 1):
                    return True
                del assigned[v]
                used.discard(w)
        return False

    return extend(0)

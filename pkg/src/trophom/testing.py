"""Seeded instance generators and naive reference oracles.

The naive oracles enumerate candidate maps directly (itertools.product or
plain recursion) and share no code with the solver; the test suite and the
batch verifiers lean on them as ground truth.
"""

from __future__ import annotations

import random
from itertools import product
from typing import Mapping, Optional, Sequence

from .graphs import TropicalGraph, tgraph


def naive_list_count(source: TropicalGraph, target: TropicalGraph,
                     lists: Mapping) -> int:
    """Number of list homomorphisms by full |V(H)|^|V(G)| enumeration."""
    if source.n == 0:
        return 1
    domains = [sorted(lists[v]) for v in range(source.n)]
    edges = sorted(source.edges)
    count = 0
    for image in product(*domains):
        if all(target.has_edge(image[u], image[v]) for u, v in edges):
            count += 1
    return count


def naive_list_status(source: TropicalGraph, target: TropicalGraph,
                      lists: Mapping) -> bool:
    if source.n == 0:
        return True
    domains = [sorted(lists[v]) for v in range(source.n)]
    edges = sorted(source.edges)
    for image in product(*domains):
        if all(target.has_edge(image[u], image[v]) for u, v in edges):
            return True
    return False


def naive_trop_status(source: TropicalGraph, target: TropicalGraph) -> bool:
    classes = target.colour_classes()
    lists = {v: classes.get(source.colours[v], ())
             for v in range(source.n)}
    return naive_list_status(source, target, lists)


def naive_digraph_status(d1, d2) -> bool:
    if d1.n == 0:
        return True
    arcs = sorted(d1.arcs)
    for image in product(range(d2.n), repeat=d1.n):
        if all((image[u], image[v]) in d2.arcs for u, v in arcs):
            return True
    return False


def random_tropical(rng: random.Random, max_n: int,
                    palette: Sequence, edge_prob: float = 0.4,
                    min_n: int = 1) -> TropicalGraph:
    n = rng.randint(min_n, max_n)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < edge_prob]
    colours = [rng.choice(list(palette)) for _ in range(n)]
    return tgraph(n, edges, colours)


def random_bipartite(rng: random.Random, max_n: int, palette_a: Sequence,
                     palette_b: Optional[Sequence] = None,
                     edge_prob: float = 0.5) -> TropicalGraph:
    """Random bipartite graph; sides may draw from separate palettes."""
    n = rng.randint(1, max_n)
    side = [rng.random() < 0.5 for _ in range(n)]
    if all(side) or not any(side):
        side[0] = not side[0] if n > 1 else side[0]
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if side[u] != side[v] and rng.random() < edge_prob]
    pb = palette_b if palette_b is not None else palette_a
    colours = [rng.choice(list(pb if side[v] else palette_a))
               for v in range(n)]
    return tgraph(n, edges, colours)


def random_tree(rng: random.Random, max_n: int,
                palette: Sequence) -> TropicalGraph:
    n = rng.randint(1, max_n)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    colours = [rng.choice(list(palette)) for _ in range(n)]
    return tgraph(n, edges, colours)


_H9_ODD_SHAPES = ({1}, {3}, {5}, {1, 3}, {3, 5}, {1, 5}, {1, 3, 5})
_H9_EVEN_SHAPES = ({2}, {4}, {6}, {2, 4}, {4, 6}, {2, 6}, {2, 4, 6})


def random_h9_instance(rng: random.Random, max_n: int = 8) -> tuple:
    """A bipartite source plus parity-pure cycle-label lists.

    Lists usually follow the bipartition (solvable-ish instances); with
    some probability a vertex draws from the wrong side, which the oracle
    then typically rejects.
    """
    source = random_bipartite(rng, max_n, palette_a=["Black"])
    from .graphs import bipartition
    bip = bipartition(source)
    lists = {}
    for v in range(source.n):
        odd_side = v in bip.part_a
        if rng.random() < 0.15:
            odd_side = not odd_side
        pool = _H9_ODD_SHAPES if odd_side else _H9_EVEN_SHAPES
        lists[v] = frozenset(rng.choice(pool))
    return source, lists

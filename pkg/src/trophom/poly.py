"""Polynomial-time solving strategies and the dispatcher that orders them.

Four routes can settle an instance without exhaustive search:

* all-forcing targets, where one anchor choice propagates a component;
* 2-SAT over caller-supplied (or colour-class) independent pair sets;
* unique-feature elimination, which rewrites the instance into a list
  homomorphism over a pruned target; and
* side-splitting of bipartite targets so the parts use disjoint palettes.

The dispatcher composes them (component split, bipartite reject, bounded
core reduction, colour split, then a strategy) and falls back to the exact
solver only when nothing applies; its status always equals ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .cores import core
from .graphs import (InputError, PreconditionError, TropicalGraph,
                     bipartition, connected_components, split_colours,
                     split_instance)
from .solver import SolveOutcome, solve_list_hom, solve_trop_hom


# ---------------------------------------------------------------------------
# forcing vertices


def forcing_vertices(target: TropicalGraph) -> frozenset:
    """Vertices whose neighbours all wear pairwise distinct colours.

    Degree <= 1 qualifies vacuously.  Mapping onto a forcing vertex pins
    the images of all neighbours at once.
    """
    out = set()
    for v in range(target.n):
        seen = set()
        ok = True
        for w in target.adjacency[v]:
            c = target.colours[w]
            if c in seen:
                ok = False
                break
            seen.add(c)
        if ok:
            out.add(v)
    return frozenset(out)


def _forced_neighbour_tables(target: TropicalGraph) -> list:
    """For each target vertex, map neighbour colour -> the one neighbour."""
    tables = []
    for v in range(target.n):
        table = {}
        for w in sorted(target.adjacency[v]):
            table[target.colours[w]] = w
        tables.append(table)
    return tables


def solve_all_forcing(source: TropicalGraph,
                      target: TropicalGraph) -> SolveOutcome:
    """Anchor-and-propagate decision for targets made of forcing vertices.

    Per source component: try every same-coloured image for the smallest
    vertex, propagate the forced images breadth-first, accept on the first
    completed trial.  Exhaustive because the propagation is deterministic.
    """
    if len(forcing_vertices(target)) != target.n:
        raise PreconditionError("target has a non-forcing vertex")
    tables = _forced_neighbour_tables(target)
    classes = target.colour_classes()

    witness: dict = {}
    trials = 0
    for comp, old in connected_components(source):
        anchor = 0  # smallest original index, since induced() sorts
        placed = None
        for t in classes.get(comp.colours[anchor], ()):
            trials += 1
            image = {anchor: t}
            queue = [anchor]
            ok = True
            while queue and ok:
                u = queue.pop()
                base = tables[image[u]]
                for w in comp.adjacency[u]:
                    req = base.get(comp.colours[w])
                    if req is None:
                        ok = False
                        break
                    if w in image:
                        if image[w] != req:
                            ok = False
                            break
                    else:
                        image[w] = req
                        queue.append(w)
            if ok:
                placed = image
                break
        if placed is None:
            return SolveOutcome(False, None, nodes=trials)
        for new, img in placed.items():
            witness[old[new]] = img
    return SolveOutcome(True, witness, nodes=trials)


# ---------------------------------------------------------------------------
# 2-SAT


@dataclass(frozen=True)
class TwoSatFormula:
    """Clauses are pairs of literals; a literal is (variable, polarity)."""

    n_vars: int
    clauses: tuple

    def __post_init__(self):
        for cl in self.clauses:
            if len(cl) != 2:
                raise InputError("2-SAT clauses take exactly two literals")
            for var, _pol in cl:
                if not 0 <= var < self.n_vars:
                    raise InputError(f"literal variable {var} out of range")


def two_sat(n_vars: int, clauses) -> TwoSatFormula:
    return TwoSatFormula(n_vars, tuple(tuple(lit) for lit in map(tuple, clauses)))


def solve_2sat(f: TwoSatFormula) -> Optional[list]:
    """Satisfying assignment or None, via implication-graph SCCs (Tarjan)."""
    n = 2 * f.n_vars
    # literal (v, pol) -> node 2v + (0 if pol else 1); node^1 is the negation
    succ = [[] for _ in range(n)]
    for (a, pa), (b, pb) in f.clauses:
        la = 2 * a + (0 if pa else 1)
        lb = 2 * b + (0 if pb else 1)
        succ[la ^ 1].append(lb)
        succ[lb ^ 1].append(la)

    index = [-1] * n
    low = [0] * n
    comp = [-1] * n
    on_stack = [False] * n
    stack: list = []
    counter = 0
    n_comps = 0

    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            while pi < len(succ[v]):
                w = succ[v][pi]
                pi += 1
                if index[w] == -1:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = n_comps
                    if w == v:
                        break
                n_comps += 1
            if work:
                u, _ = work[-1]
                low[u] = min(low[u], low[v])

    assignment = []
    for v in range(f.n_vars):
        if comp[2 * v] == comp[2 * v + 1]:
            return None
        # Tarjan completes sink components first; the literal whose
        # component finishes earlier is safe to satisfy.
        assignment.append(comp[2 * v] < comp[2 * v + 1])
    return assignment


# ---------------------------------------------------------------------------
# pair-set reduction (independent sets of size <= 2)


def _check_pair_sets(target: TropicalGraph, pair_sets) -> list:
    sets = []
    for i, s in enumerate(pair_sets):
        members = tuple(s)
        if not 1 <= len(members) <= 2 or len(set(members)) != len(members):
            raise PreconditionError(f"pair set {i} must hold 1 or 2 vertices")
        for v in members:
            if not 0 <= v < target.n:
                raise InputError(f"pair set {i} mentions vertex {v}")
        if len(members) == 2 and target.has_edge(*members):
            raise PreconditionError(f"pair set {i} is not independent")
        sets.append(members)
    return sets


def solve_via_pairs(source: TropicalGraph, target: TropicalGraph,
                    pair_sets: Sequence, assign: Mapping) -> SolveOutcome:
    """Decide the instance as a 2-SAT formula over the source vertices.

    Every source vertex is committed to one independent set of at most two
    target vertices (first member listed means TRUE); each source edge
    contributes the clauses forbidding incompatible truth combinations.
    Exact whenever some optimal homomorphism respects the commitment, which
    holds in particular when the sets are the target's colour classes.
    """
    sets = _check_pair_sets(target, pair_sets)
    idx_of = {}
    for v in range(source.n):
        if v not in assign:
            raise InputError(f"no pair set assigned to source vertex {v}")
        i = assign[v]
        if not 0 <= i < len(sets):
            raise InputError(f"pair set index {i} out of range")
        idx_of[v] = i

    clauses = []
    for v in range(source.n):
        members = sets[idx_of[v]]
        allowed = [m for m in members
                   if target.colours[m] == source.colours[v]]
        if not allowed:
            return SolveOutcome(False, None)
        if len(members) == 1 or allowed == [members[0]]:
            clauses.append(((v, True), (v, True)))
        elif allowed == [members[1]]:
            clauses.append(((v, False), (v, False)))

    all_combos = ((True, True), (True, False), (False, True), (False, False))
    for x, y in source.edges:
        i, j = idx_of[x], idx_of[y]
        if i == j:
            return SolveOutcome(False, None)
        si, sj = sets[i], sets[j]
        allowed = set()
        for u in si:
            for w in sj:
                if target.has_edge(u, w):
                    allowed.add((u == si[0], w == sj[0]))
        if not allowed:
            return SolveOutcome(False, None)
        for bx, by in all_combos:
            if (bx, by) not in allowed:
                clauses.append(((x, not bx), (y, not by)))

    result = solve_2sat(TwoSatFormula(source.n, tuple(clauses)))
    if result is None:
        return SolveOutcome(False, None)
    witness = {}
    for v in range(source.n):
        members = sets[idx_of[v]]
        witness[v] = members[0] if (result[v] or len(members) == 1) \
            else members[1]
    return SolveOutcome(True, witness)


def colour_class_pairs(target: TropicalGraph) -> tuple:
    """The built-in pair rule: colour classes of size at most two.

    Returns (pair_sets, colour->index).  PreconditionError when a class is
    larger than two or not independent.
    """
    classes = target.colour_classes()
    keys = sorted(classes, key=lambda c: classes[c][0])
    pair_sets = []
    which = {}
    for c in keys:
        members = classes[c]
        if len(members) > 2:
            raise PreconditionError(
                f"colour {c!r} is used {len(members)} times")
        which[c] = len(pair_sets)
        pair_sets.append(members)
    _check_pair_sets(target, pair_sets)
    return pair_sets, which


def solve_by_colour_pairs(source: TropicalGraph,
                          target: TropicalGraph) -> SolveOutcome:
    """2-SAT route for targets where each colour is used at most twice."""
    pair_sets, which = colour_class_pairs(target)
    assign = {}
    for v in range(source.n):
        i = which.get(source.colours[v])
        if i is None:
            return SolveOutcome(False, None)
        assign[v] = i
    return solve_via_pairs(source, target, pair_sets, assign)


# ---------------------------------------------------------------------------
# unique tropical features


@dataclass(frozen=True)
class FeatureSet:
    """Locally unique colour patterns of a target, by kind.

    type1: vertices alone in their colour class.
    type2: edges whose endpoint colour pair appears on no other edge
           (only distinctly coloured endpoints are eligible; see notes).
    type3: vertices with a monochromatic neighbourhood nothing else can
           reach under the same colours.
    type4: forcing vertices whose two-step colour pattern occurs nowhere
           else, replaceable by pendant edges.
    """

    type1: frozenset = frozenset()
    type2: frozenset = frozenset()
    type3: frozenset = frozenset()
    type4: frozenset = frozenset()

    def __bool__(self):
        return bool(self.type1 or self.type2 or self.type3 or self.type4)


def _is_type1(target: TropicalGraph, u: int) -> bool:
    return len(target.colour_classes()[target.colours[u]]) == 1


def _is_type2(target: TropicalGraph, edge) -> bool:
    a, b = edge
    ca, cb = target.colours[a], target.colours[b]
    if ca == cb:
        # The elimination pins the two endpoints to the two ends of this
        # edge; with equal colours that orientation is ill-defined.
        return False
    for u, v in target.edges:
        if (u, v) == edge:
            continue
        if {target.colours[u], target.colours[v]} == {ca, cb}:
            return False
    return True


def _is_type3(target: TropicalGraph, u: int) -> bool:
    nbrs = target.adjacency[u]
    if not nbrs:
        return False
    s = {target.colours[w] for w in nbrs}
    if len(s) != 1:
        return False
    s_colour = next(iter(s))
    cu = target.colours[u]
    for w in range(target.n):
        if target.colours[w] != s_colour or w in nbrs:
            continue
        if any(target.colours[x] == cu for x in target.adjacency[w]):
            return False
    return True


def _is_type4(target: TropicalGraph, u: int) -> bool:
    if not target.adjacency[u]:
        # an isolated vertex would be deleted with no pendant replacing it
        return False
    if u not in forcing_vertices(target):
        return False
    cu = target.colours[u]
    nbr_colours = sorted({target.colours[w] for w in target.adjacency[u]},
                         key=repr)
    if len(nbr_colours) < 2:
        return True
    # No other vertex of u's colour may see two of these colours at once;
    # that covers paths through u as an endpoint as well as paths avoiding
    # u entirely, which is what the elimination actually relies on.
    for m in range(target.n):
        if m == u or target.colours[m] != cu:
            continue
        seen = {target.colours[w] for w in target.adjacency[m]}
        hits = [c for c in nbr_colours if c in seen]
        if len(hits) >= 2:
            return False
    return True


def detect_features(target: TropicalGraph) -> FeatureSet:
    """Maximal feature sets of each kind; memberships are re-checkable."""
    t1 = frozenset(u for u in range(target.n) if _is_type1(target, u))
    t2 = frozenset(e for e in target.edges if _is_type2(target, e))
    t3 = frozenset(u for u in range(target.n) if _is_type3(target, u))
    t4 = frozenset(u for u in range(target.n) if _is_type4(target, u))
    return FeatureSet(t1, t2, t3, t4)


@dataclass(frozen=True)
class ReducedInstance:
    """A list-homomorphism instance equivalent to the original problem.

    source/lists/target are reindexed; the *_to_original tuples recover
    original indices (pendant target vertices point back at the vertex
    they replace), and pinned records the forced images of source
    vertices the elimination deleted.
    """

    source: TropicalGraph
    lists: dict
    target: TropicalGraph
    source_to_original: tuple
    target_to_original: tuple
    pinned: dict


def _validate_features(target: TropicalGraph, s: FeatureSet):
    for u in s.type1:
        if not _is_type1(target, u):
            raise InputError(f"vertex {u} is not a type-1 feature")
    for e in s.type2:
        edge = tuple(sorted(e))
        if edge not in target.edges or not _is_type2(target, edge):
            raise InputError(f"edge {e} is not a type-2 feature")
    for u in s.type3:
        if not _is_type3(target, u):
            raise InputError(f"vertex {u} is not a type-3 feature")
    for u in s.type4:
        if not _is_type4(target, u):
            raise InputError(f"vertex {u} is not a type-4 feature")
    v1, v3, v4 = set(s.type1), set(s.type3), set(s.type4)
    if v1 & v3 or v1 & v4 or v3 & v4:
        raise InputError("feature vertex sets must be pairwise disjoint")
    deleted = v1 | v3 | v4
    for u in s.type4:
        if any(w in deleted for w in target.adjacency[u]):
            raise InputError(
                f"type-4 vertex {u} borders another deleted feature")


def reduce_by_features(source: TropicalGraph, target: TropicalGraph,
                       s: FeatureSet) -> Optional[ReducedInstance]:
    """Eliminate the features in kind order 1,2,3,4 (ascending within each).

    Returns the surviving instance over the pruned target, or None when a
    list empties along the way, which proves the instance unsolvable.
    """
    _validate_features(target, s)
    classes = target.colour_classes()

    alive = [True] * source.n
    adj = [set(source.adjacency[v]) for v in range(source.n)]
    lists = [set(classes.get(source.colours[v], ()))
             for v in range(source.n)]
    pinned: dict = {}

    def drop_vertex(v: int):
        alive[v] = False
        for w in adj[v]:
            adj[w].discard(v)
        adj[v].clear()

    def shrink(w: int, allowed) -> bool:
        lists[w] &= allowed
        return bool(lists[w])

    for v in range(source.n):
        if not lists[v]:
            return None

    # type 1: the single vertex of its colour
    for u in sorted(s.type1):
        nu = set(target.adjacency[u])
        su = target.colours[u]
        for v in range(source.n):
            if not alive[v] or source.colours[v] != su:
                continue
            for w in sorted(adj[v]):
                if not shrink(w, nu):
                    return None
            pinned[v] = u
            drop_vertex(v)

    # type 2: the single edge with its colour pair
    for a, b in sorted(s.type2):
        ca, cb = target.colours[a], target.colours[b]
        for x, y in sorted(source.edges):
            if not (alive[x] and alive[y]) or y not in adj[x]:
                continue
            cx, cy = source.colours[x], source.colours[y]
            if (cx, cy) == (ca, cb):
                px, py = a, b
            elif (cx, cy) == (cb, ca):
                x, y = y, x
                px, py = a, b
            else:
                continue
            if not shrink(x, {px}) or not shrink(y, {py}):
                return None
            adj[x].discard(y)
            adj[y].discard(x)

    # type 3: monochromatic neighbourhood, unreachable elsewhere
    for u in sorted(s.type3):
        nu = set(target.adjacency[u])
        s_colour = target.colours[next(iter(target.adjacency[u]))]
        cu = target.colours[u]
        for v in range(source.n):
            if not alive[v] or source.colours[v] != cu or u not in lists[v]:
                continue
            if any(source.colours[w] != s_colour for w in adj[v]):
                continue
            for w in sorted(adj[v]):
                if not shrink(w, nu):
                    return None
            pinned[v] = u
            drop_vertex(v)

    # type 4: forced landings, then pendant surgery on the target
    for u in sorted(s.type4):
        by_colour = {}
        for w in sorted(target.adjacency[u]):
            by_colour[target.colours[w]] = w
        cu = target.colours[u]
        pattern = []
        for x in range(source.n):
            if not alive[x] or source.colours[x] != cu:
                continue
            hit = {source.colours[w] for w in adj[x]
                   if source.colours[w] in by_colour}
            if len(hit) >= 2:
                pattern.append(x)
        pat = set(pattern)
        for x in pattern:
            if u not in lists[x]:
                return None
            if any(w in pat for w in adj[x]):
                return None
        for x in pattern:
            boundary = sorted(adj[x])
            pinned[x] = u
            drop_vertex(x)
            for y in boundary:
                req = by_colour.get(source.colours[y])
                if req is None or not shrink(y, {req}):
                    return None

    # assemble the pruned target and project the lists onto it
    gone = set(s.type1) | set(s.type3) | set(s.type4)
    survivors = [h for h in range(target.n) if h not in gone]
    pos = {h: i for i, h in enumerate(survivors)}
    cut = {tuple(sorted(e)) for e in s.type2}
    t_edges = set()
    for a, b in target.edges:
        if a in pos and b in pos and (a, b) not in cut:
            t_edges.add((pos[a], pos[b]))
    t_colours = [target.colours[h] for h in survivors]
    t_back = list(survivors)
    pendants = {}
    for u in sorted(s.type4):
        for v in sorted(target.adjacency[u]):
            idx = len(t_colours)
            t_colours.append(target.colours[u])
            t_back.append(u)
            t_edges.add(tuple(sorted((idx, pos[v]))))
            pendants.setdefault(u, []).append(idx)

    new_target = TropicalGraph(len(t_colours), frozenset(t_edges),
                               tuple(t_colours))

    kept = [v for v in range(source.n) if alive[v]]
    s_pos = {v: i for i, v in enumerate(kept)}
    s_edges = frozenset(
        tuple(sorted((s_pos[x], s_pos[y])))
        for x in kept for y in adj[x] if x < y)
    new_source = TropicalGraph(
        len(kept), s_edges, tuple(source.colours[v] for v in kept))

    new_lists = {}
    for v in kept:
        dom = {pos[h] for h in lists[v] if h in pos}
        for u, pend in pendants.items():
            if u in lists[v]:
                dom.update(pend)
        if not dom:
            return None
        new_lists[s_pos[v]] = frozenset(dom)

    return ReducedInstance(new_source, new_lists, new_target,
                           tuple(kept), tuple(t_back), pinned)


# ---------------------------------------------------------------------------
# dispatcher


ROUTE_CORE = "CoreReduced"
ROUTE_FORCING = "AllForcing"
ROUTE_TWOSAT = "TwoSat"
ROUTE_FEATURE = "UniqueFeature"
ROUTE_SPLIT = "SplitColours"
ROUTE_FALLBACK = "ExactFallback"


@dataclass(frozen=True)
class StrategyReport:
    route: tuple
    notes: tuple = ()


@dataclass(frozen=True)
class _TargetPlan:
    graph: TropicalGraph          # strategy target (core, maybe split)
    steps: tuple
    strategy: str
    to_original: tuple            # strategy-target index -> target index
    split: bool
    features: Optional[FeatureSet] = None


def _disjoint_features(fs: FeatureSet, target: TropicalGraph) -> FeatureSet:
    """Normalize for reduction: kinds 1 < 3 < 4 claim a vertex first, and a
    type-4 vertex adjacent to any deleted vertex is dropped."""
    t1 = set(fs.type1)
    t3 = set(fs.type3) - t1
    t4 = set(fs.type4) - t1 - t3
    deleted = t1 | t3 | t4
    t4 = {u for u in t4
          if not any(w in deleted for w in target.adjacency[u])}
    return FeatureSet(frozenset(t1), fs.type2, frozenset(t3), frozenset(t4))


def _plan_target(tc: TropicalGraph, core_bound: int = 20) -> _TargetPlan:
    steps = []
    work = tc
    to_original = tuple(range(tc.n))
    if 0 < tc.n <= core_bound:
        reduced = core(tc)
        if reduced.graph.n < tc.n:
            steps.append(ROUTE_CORE)
            work = reduced.graph
            to_original = reduced.retained
    split = bipartition(work) is not None and work.n > 0
    if split:
        steps.append(ROUTE_SPLIT)
        work = split_colours(work)

    if len(forcing_vertices(work)) == work.n:
        strategy = ROUTE_FORCING
    else:
        classes = work.colour_classes()
        small = all(len(vs) <= 2 for vs in classes.values())
        independent = small and all(
            not work.has_edge(*vs) for vs in classes.values()
            if len(vs) == 2)
        if small and independent:
            strategy = ROUTE_TWOSAT
        else:
            features = _disjoint_features(detect_features(work), work)
            if features:
                steps.append(ROUTE_FEATURE)
                return _TargetPlan(work, tuple(steps), ROUTE_FEATURE,
                                   to_original, split, features)
            strategy = ROUTE_FALLBACK
    steps.append(strategy)
    return _TargetPlan(work, tuple(steps), strategy, to_original, split)


def _run_strategy(src: TropicalGraph, plan: _TargetPlan) -> SolveOutcome:
    t = plan.graph
    if plan.strategy == ROUTE_FORCING:
        return solve_all_forcing(src, t)
    if plan.strategy == ROUTE_TWOSAT:
        return solve_by_colour_pairs(src, t)
    if plan.strategy == ROUTE_FEATURE:
        red = reduce_by_features(src, t, plan.features)
        if red is None:
            return SolveOutcome(False, None)
        out = solve_list_hom(red.source, red.target, red.lists)
        if not out.solvable:
            return out
        witness = dict(red.pinned)
        for new_v, new_t in out.witness.items():
            witness[red.source_to_original[new_v]] = \
                red.target_to_original[new_t]
        return SolveOutcome(True, witness, out.nodes, out.passes)
    return solve_trop_hom(src, t)


def _solve_component(sc: TropicalGraph, plan: _TargetPlan,
                     notes: list, label: str) -> SolveOutcome:
    if plan.split:
        if bipartition(sc) is None:
            notes.append(f"{label}: odd cycle against a bipartite target")
            return SolveOutcome(False, None)
        for variant in split_instance(sc):
            out = _run_strategy(variant, plan)
            if out.solvable:
                return out
        return SolveOutcome(False, None)
    return _run_strategy(sc, plan)


def dispatch_solve(source: TropicalGraph,
                   target: TropicalGraph) -> tuple:
    """Route the instance through the strategy pipeline.

    Returns (SolveOutcome, StrategyReport).  The route lists the pipeline
    steps chosen for the target; ExactFallback appears only when no
    polynomial strategy applied.  The status always equals the exact
    solver's answer.
    """
    notes: list = []
    target_comps = connected_components(target)
    plans = []
    route: list = []
    for ci, (tc, tmap) in enumerate(target_comps):
        plan = _plan_target(tc)
        plans.append((plan, tmap))
        label = f"target[{ci}]" if len(target_comps) > 1 else "target"
        notes.append(f"{label}: " + " -> ".join(plan.steps))
        for step in plan.steps:
            if step not in route:
                route.append(step)
    if not plans:
        plans = [(_plan_target(target), tuple())]
        route = list(plans[0][0].steps)
    if ROUTE_FALLBACK in route:
        route = [s for s in route if s != ROUTE_FALLBACK] + [ROUTE_FALLBACK]

    witness: dict = {}
    solvable = True
    for si, (sc, smap) in enumerate(connected_components(source)):
        label = f"source[{si}]"
        placed = None
        for plan, tmap in plans:
            out = _solve_component(sc, plan, notes, label)
            if out.solvable:
                placed = {}
                for v, img in out.witness.items():
                    orig_in_comp = plan.to_original[img]
                    placed[smap[v]] = tmap[orig_in_comp] if tmap else \
                        orig_in_comp
                break
        if placed is None:
            solvable = False
            witness = {}
            break
        witness.update(placed)

    report = StrategyReport(tuple(route), tuple(notes))
    if not solvable:
        return SolveOutcome(False, None), report
    return SolveOutcome(True, witness), report

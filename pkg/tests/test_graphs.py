import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trophom import (InputError, PreconditionError, bipartition,
                     connected_components, cycle_graph, path_graph, plain,
                     split_colours, split_instance, tgraph, validate_hom)
from trophom.testing import naive_trop_status, random_bipartite


def has_odd_closed_walk(g):
    """Independent oracle: parity-layered reachability per component."""
    for start in range(g.n):
        seen = {(start, 0)}
        frontier = [(start, 0)]
        while frontier:
            v, par = frontier.pop()
            for w in g.adjacency[v]:
                nxt = (w, 1 - par)
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        if (start, 1) in seen:  # odd walk from start back to itself
            return True
    return False


class TestValidateHom:
    def test_identity_holds_everywhere(self):
        for g in (cycle_graph(list("ABCDEF")), plain(1, []),
                  path_graph(["R", "B", "G"])):
            assert validate_hom(g, g, {v: v for v in range(g.n)})

    def test_bipartite_fold_onto_edge(self):
        c4 = cycle_graph(["Black"] * 4)
        edge = plain(2, [(0, 1)])
        assert validate_hom(c4, edge, {0: 0, 1: 1, 2: 0, 3: 1})

    def test_colour_swap_rejected(self):
        bw = tgraph(2, [(0, 1)], ["Black", "White"])
        wb = tgraph(2, [(0, 1)], ["White", "Black"])
        assert not validate_hom(bw, wb, {0: 0, 1: 1})
        assert validate_hom(bw, wb, {0: 1, 1: 0})

    def test_partial_map_is_an_error(self):
        edge = plain(2, [(0, 1)])
        with pytest.raises(InputError):
            validate_hom(edge, edge, {0: 0})

    def test_out_of_range_image_is_an_error(self):
        edge = plain(2, [(0, 1)])
        with pytest.raises(InputError):
            validate_hom(edge, edge, {0: 0, 1: 7})


class TestBipartition:
    def test_c6(self):
        bip = bipartition(cycle_graph(["x"] * 6))
        assert sorted(map(len, (bip.part_a, bip.part_b))) == [3, 3]
        assert bip.part_a | bip.part_b == set(range(6))

    def test_c5_has_none(self):
        assert bipartition(cycle_graph(["x"] * 5)) is None

    def test_single_vertex(self):
        bip = bipartition(plain(1, []))
        assert (set(bip.part_a), set(bip.part_b)) == ({0}, set())

    @given(st.data())
    @settings(max_examples=120, deadline=None)
    def test_matches_odd_walk_oracle(self, data):
        n = data.draw(st.integers(1, 10))
        edges = data.draw(st.sets(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
            .filter(lambda e: e[0] != e[1])))
        g = plain(n, edges)
        bip = bipartition(g)
        assert (bip is None) == has_odd_closed_walk(g)
        if bip is not None:
            for u, v in g.edges:
                assert (u in bip.part_a) != (v in bip.part_a)


class TestComponents:
    def test_two_disjoint_edges(self):
        g = plain(4, [(0, 1), (2, 3)])
        comps = connected_components(g)
        assert len(comps) == 2
        assert [old for _, old in comps] == [(0, 1), (2, 3)]

    def test_connected_graph_is_one_component(self):
        g = cycle_graph(["a", "b"] * 3)
        comps = connected_components(g)
        assert len(comps) == 1
        assert comps[0][0] == g

    def test_empty_graph(self):
        assert connected_components(plain(0, [])) == []


class TestSplitColours:
    def test_p2(self):
        p2 = plain(2, [(0, 1)])
        assert split_colours(p2).colours == (("Black", 0), ("Black", 1))

    def test_c6_two_colour_sides(self):
        # sides {Red,Red,Blue} / {Red,Blue,Blue} in cyclic interleaving
        g = cycle_graph(["Red", "Red", "Red", "Blue", "Blue", "Blue"])
        split = split_colours(g)
        palette = set(split.colours)
        assert palette == {("Red", 0), ("Blue", 0), ("Red", 1), ("Blue", 1)}
        assert split.edges == g.edges

    def test_double_split_keeps_the_partition(self):
        g = cycle_graph(["R", "R", "B", "R", "B", "B"])
        once = split_colours(g)
        twice = split_colours(once)

        def classes(graph):
            groups = {}
            for v, c in enumerate(graph.colours):
                groups.setdefault(c, set()).add(v)
            return sorted(map(sorted, groups.values()))

        assert classes(twice) == classes(once)

    def test_rejects_odd_cycles_and_disconnected(self):
        with pytest.raises(PreconditionError):
            split_colours(cycle_graph(["x"] * 5))
        with pytest.raises(PreconditionError):
            split_colours(plain(4, [(0, 1), (2, 3)]))

    def test_refines_colour_partition(self):
        rng = random.Random(5)
        for _ in range(40):
            g = random_bipartite(rng, 8, ["a", "b", "c"])
            comps = connected_components(g)
            if len(comps) != 1:
                continue
            split = split_colours(g)
            assert split.n == g.n and split.edges == g.edges
            for v in range(g.n):
                base, _bit = split.colours[v]
                assert base == g.colours[v]


class TestSplitInstance:
    def test_p2_black(self):
        p2 = plain(2, [(0, 1)])
        a, b = split_instance(p2)
        assert a.colours == (("Black", 0), ("Black", 1))
        assert b.colours == (("Black", 1), ("Black", 0))

    def test_single_vertex(self):
        a, b = split_instance(plain(1, []))
        assert a.colours == (("Black", 0),)
        assert b.colours == (("Black", 1),)

    def test_equivalence_on_random_pairs(self):
        # original solvable iff one of the two split instances solvable
        rng = random.Random(11)
        done = 0
        while done < 100:
            src = random_bipartite(rng, 8, ["a", "b"])
            tgt = random_bipartite(rng, 8, ["a", "b"])
            if len(connected_components(src)) != 1 \
                    or len(connected_components(tgt)) != 1:
                continue
            done += 1
            want = naive_trop_status(src, tgt)
            split_tgt = split_colours(tgt)
            got = any(naive_trop_status(v, split_tgt)
                      for v in split_instance(src))
            assert got == want

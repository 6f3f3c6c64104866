import random
from itertools import product

import pytest

from trophom import (InputError, ac_reduce, colour_lists, cycle_graph,
                     dgraph, enumerate_homs, plain, solve_digraph_hom,
                     solve_list_hom, solve_retraction, solve_trop_hom,
                     tgraph, validate_hom)
from trophom.testing import (naive_digraph_status, naive_list_count,
                             naive_list_status, naive_trop_status,
                             random_tree, random_tropical)


def full_lists(source, target):
    return {v: frozenset(range(target.n)) for v in range(source.n)}


class TestSolveListHom:
    def test_edge_to_edge_full(self):
        e = plain(2, [(0, 1)])
        out = solve_list_hom(e, e, full_lists(e, e))
        assert out.solvable
        assert validate_hom(e, e, out.witness)

    def test_empty_list_is_unsolvable(self):
        e = plain(2, [(0, 1)])
        out = solve_list_hom(e, e, {0: frozenset(), 1: frozenset({0, 1})})
        assert not out.solvable and out.witness is None

    def test_c6_singleton_lists(self):
        c6 = cycle_graph(["x"] * 6)
        identity = {v: {v} for v in range(6)}
        rotation = {v: {(v + 1) % 6} for v in range(6)}
        assert solve_list_hom(c6, c6, identity).witness == \
            {v: v for v in range(6)}
        assert solve_list_hom(c6, c6, rotation).witness == \
            {v: (v + 1) % 6 for v in range(6)}

    def test_malformed_lists_raise(self):
        e = plain(2, [(0, 1)])
        with pytest.raises(InputError):
            solve_list_hom(e, e, {0: {0}})
        with pytest.raises(InputError):
            solve_list_hom(e, e, {0: {0}, 1: {5}})

    def test_matches_naive_enumeration_on_seeded_suite(self):
        rng = random.Random(20250808)
        for _ in range(150):
            src = random_tropical(rng, 6, ["a", "b"])
            tgt = random_tropical(rng, 5, ["a", "b"])
            lists = {v: frozenset(t for t in range(tgt.n)
                                  if rng.random() < 0.7)
                     for v in range(src.n)}
            out = solve_list_hom(src, tgt, lists)
            assert out.solvable == naive_list_status(src, tgt, lists)
            if out.solvable:
                assert all(out.witness[v] in lists[v] for v in range(src.n))
                for u, v in src.edges:
                    assert tgt.has_edge(out.witness[u], out.witness[v])

    def test_witness_deterministic(self):
        rng = random.Random(3)
        for _ in range(25):
            src = random_tropical(rng, 6, ["a", "b"])
            tgt = random_tropical(rng, 5, ["a", "b"])
            first = solve_trop_hom(src, tgt)
            second = solve_trop_hom(src, tgt)
            assert first.witness == second.witness


class TestEnumerate:
    def test_edge_to_edge_two_maps(self):
        e = plain(2, [(0, 1)])
        found = enumerate_homs(e, e, full_lists(e, e))
        assert len(found.maps) == 2 and not found.truncated

    def test_k1_to_k3(self):
        k1 = plain(1, [])
        k3 = plain(3, [(0, 1), (1, 2), (0, 2)])
        found = enumerate_homs(k1, k3)
        assert [m[0] for m in found.maps] == [0, 1, 2]

    def test_c4_to_k3_is_18(self):
        c4 = plain(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        k3 = plain(3, [(0, 1), (1, 2), (0, 2)])
        # oracle first: brute force over all 3^4 maps
        assert naive_list_count(c4, k3, full_lists(c4, k3)) == 18
        found = enumerate_homs(c4, k3)
        assert len(found.maps) == 18 and not found.truncated

    def test_lexicographic_and_duplicate_free(self):
        rng = random.Random(9)
        for _ in range(40):
            src = random_tropical(rng, 5, ["a"])
            tgt = random_tropical(rng, 4, ["a"])
            found = enumerate_homs(src, tgt)
            tuples = [tuple(m[v] for v in range(src.n)) for m in found.maps]
            assert tuples == sorted(set(tuples))
            assert len(found.maps) == naive_list_count(
                src, tgt, full_lists(src, tgt))

    def test_limit_and_truncation_flag(self):
        c4 = plain(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        k3 = plain(3, [(0, 1), (1, 2), (0, 2)])
        found = enumerate_homs(c4, k3, limit=5)
        assert len(found.maps) == 5 and found.truncated
        found = enumerate_homs(c4, k3, limit=18)
        assert len(found.maps) == 18 and not found.truncated
        with pytest.raises(InputError):
            enumerate_homs(c4, k3, limit=0)


class TestTropHom:
    def test_identity(self):
        g = cycle_graph(["R", "B", "G", "R", "B", "G"])
        out = solve_trop_hom(g, g)
        assert out.solvable and validate_hom(g, g, out.witness)

    def test_odd_source_against_bipartite_target(self):
        c5 = cycle_graph(["B"] * 5)
        edge = plain(2, [(0, 1)])
        assert not solve_trop_hom(c5, edge).solvable

    def test_matches_naive_on_seeded_suite(self):
        rng = random.Random(77)
        for _ in range(120):
            src = random_tropical(rng, 6, ["a", "b", "c"])
            tgt = random_tropical(rng, 5, ["a", "b", "c"])
            assert solve_trop_hom(src, tgt).solvable == \
                naive_trop_status(src, tgt)


class TestDigraph:
    def test_single_arc(self):
        arc = dgraph(2, [(0, 1)])
        assert solve_digraph_hom(arc, arc).solvable

    def test_two_cycle_to_arc(self):
        two = dgraph(2, [(0, 1), (1, 0)])
        arc = dgraph(2, [(0, 1)])
        # oracle first: all 4 maps fail by direct check
        assert not naive_digraph_status(two, arc)
        assert not solve_digraph_hom(two, arc).solvable

    def test_directed_triangle_rotation(self):
        tri = dgraph(3, [(0, 1), (1, 2), (2, 0)])
        out = solve_digraph_hom(tri, tri)
        assert out.solvable

    def test_matches_naive_on_random_pairs(self):
        rng = random.Random(13)
        for _ in range(150):
            n1, n2 = rng.randint(1, 4), rng.randint(1, 4)
            a1 = [(u, v) for u in range(n1) for v in range(n1)
                  if u != v and rng.random() < 0.4]
            a2 = [(u, v) for u in range(n2) for v in range(n2)
                  if u != v and rng.random() < 0.4]
            d1, d2 = dgraph(n1, a1), dgraph(n2, a2)
            assert solve_digraph_hom(d1, d2).solvable == \
                naive_digraph_status(d1, d2)


class TestRetraction:
    def test_identity_copy(self):
        g = cycle_graph(["R", "B"] * 3)
        out = solve_retraction(g, g, {v: v for v in range(6)})
        assert out.solvable and out.witness == {v: v for v in range(6)}

    def test_c6_retracts_onto_an_edge(self):
        c6 = plain(6, [(i, (i + 1) % 6) for i in range(6)])
        edge = plain(2, [(0, 1)])
        # oracle: some total map fixing {0 -> 0, 1 -> 1} folds the cycle
        found = False
        for image in product(range(2), repeat=6):
            if image[0] != 0 or image[1] != 1:
                continue
            if all(edge.has_edge(image[u], image[v]) for u, v in c6.edges):
                found = True
                break
        assert found
        out = solve_retraction(c6, edge, {0: 0, 1: 1})
        assert out.solvable
        assert out.witness[0] == 0 and out.witness[1] == 1

    def test_c8_identity_copy(self):
        c8 = plain(8, [(i, (i + 1) % 8) for i in range(8)])
        assert solve_retraction(c8, c8, {v: v for v in range(8)}).solvable

    def test_invalid_embeddings_rejected(self):
        c6 = plain(6, [(i, (i + 1) % 6) for i in range(6)])
        edge = plain(2, [(0, 1)])
        with pytest.raises(InputError):
            solve_retraction(c6, edge, {0: 0, 1: 2})  # not an edge
        with pytest.raises(InputError):
            solve_retraction(c6, edge, {0: 0, 1: 0})  # not injective
        coloured = tgraph(2, [(0, 1)], ["R", "B"])
        with pytest.raises(InputError):
            solve_retraction(c6, coloured, {0: 0, 1: 1})  # colours differ


class TestArcConsistency:
    def test_tree_supports_are_exact(self):
        # On tree sources, every surviving value extends to a solution.
        rng = random.Random(42)
        for _ in range(60):
            src = random_tree(rng, 10, ["a", "b"])
            tgt = random_tropical(rng, 5, ["a", "b"])
            lists = colour_lists(src, tgt)
            reduced = ac_reduce(src, tgt, lists)
            found = enumerate_homs(src, tgt, lists)
            supported = {v: {m[v] for m in found.maps}
                         for v in range(src.n)}
            if reduced is None:
                assert not found.maps
                continue
            for v in range(src.n):
                assert set(reduced[v]) == supported[v]

    def test_never_removes_supported_values(self):
        # On arbitrary sources AC keeps every value some solution uses.
        rng = random.Random(43)
        for _ in range(60):
            src = random_tropical(rng, 5, ["a", "b"])
            tgt = random_tropical(rng, 4, ["a", "b"])
            lists = colour_lists(src, tgt)
            reduced = ac_reduce(src, tgt, lists)
            found = enumerate_homs(src, tgt, lists)
            if reduced is None:
                assert not found.maps
                continue
            for m in found.maps:
                for v in range(src.n):
                    assert m[v] in reduced[v]

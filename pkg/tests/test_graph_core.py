"""Graph, ColorSet, PartialColoring and the strong-coloring verifier."""

import random

import networkx as nx
import pytest

from modules.corpus import complete_graph, cycle_graph, gen_k_prism, random_claw_free_subcubic
from modules.errors import GraphArgumentError
from modules.graph_core import (
    OUT_OF_PALETTE, SAME_COLOR, UNCOLORED, ColorSet, Graph, PartialColoring, conflict_graph,
    conflict_graph_generic, is_good, sees, verify_strong,
)


class TestGraph:
    def test_edges_sorted_and_indexed(self):
        g = Graph(4, [(3, 2), (1, 0), (2, 0)])
        assert g.edges == ((0, 1), (0, 2), (2, 3))
        assert g.edge_id(3, 2) == 2
        assert g.endpoints(1) == (0, 2)
        assert g.incident(0) == (0, 1)

    @pytest.mark.parametrize("edges", [[(0, 0)], [(0, 1), (1, 0)], [(0, 5)]])
    def test_rejects_bad_edges(self, edges):
        with pytest.raises(GraphArgumentError):
            Graph(3, edges)

    def test_edge_id_of_non_edge(self):
        with pytest.raises(GraphArgumentError):
            cycle_graph(5).edge_id(0, 2)

    def test_components_are_sorted(self):
        g = Graph(6, [(4, 5), (0, 2)])
        assert g.components() == [[0, 2], [1], [3], [4, 5]]
        assert not g.is_connected()

    def test_induced_subgraph_keeps_order(self):
        g = cycle_graph(6)
        sub, back = g.induced_subgraph([5, 0, 1])
        assert back == [0, 1, 5]
        assert sub.edges == ((0, 1), (0, 2))

    def test_networkx_round_trip(self):
        g = gen_k_prism(4)
        assert Graph.from_networkx(g.to_networkx()) == g


class TestSees:
    def test_seen_edges_matches_line_graph_square(self):
        g = random_claw_free_subcubic(30, seed=3)
        line = nx.line_graph(g.to_networkx())
        square = nx.power(line, 2)
        for e, (u, v) in enumerate(g.edges):
            expected = sorted(g.edge_id(*f) for f in square.neighbors((u, v)))
            assert list(g.seen_edges(e)) == expected

    def test_sees_distance_two_but_not_three(self):
        g = cycle_graph(7)
        e01 = g.edge_id(0, 1)
        assert sees(g, e01, g.edge_id(2, 3))
        assert not sees(g, e01, g.edge_id(3, 4))

    def test_edge_does_not_see_itself(self):
        with pytest.raises(GraphArgumentError):
            sees(cycle_graph(5), 0, 0)

    def test_conflict_graph_constructions_agree(self):
        for g in (complete_graph(4), gen_k_prism(5), random_claw_free_subcubic(20, seed=11)):
            assert conflict_graph(g) == conflict_graph_generic(g)

    def test_prism_conflict_graph_is_complete(self):
        cg = conflict_graph(gen_k_prism(3))
        assert cg.m == 9 * 8 // 2


class TestColorSet:
    def test_set_operations(self):
        a = ColorSet([1, 2, 3])
        b = ColorSet([3, 4])
        assert list(a & b) == [3]
        assert list(a | b) == [1, 2, 3, 4]
        assert list(a - b) == [1, 2]
        assert a.without(1, 2) == ColorSet([3])
        assert ColorSet().first() is None
        assert b.first() == 3

    def test_palette_and_complement(self):
        assert len(ColorSet.palette(7)) == 7
        assert list(ColorSet([1, 7]).complement(7)) == [2, 3, 4, 5, 6]


class TestVerify:
    def test_c6_three_colors_valid(self):
        g = cycle_graph(6)
        c = PartialColoring(6, 3, [1, 2, 3, 1, 2, 3])
        assert verify_strong(g, c) == []

    def test_c6_two_colors_conflicts(self):
        g = cycle_graph(6)
        # edges sorted: 01 05 12 23 34 45
        c = PartialColoring(6, 9, [1, 2, 1, 2, 1, 2])
        violations = verify_strong(g, c)
        assert violations
        assert all(v.kind == SAME_COLOR for v in violations)

    def test_uncolored_and_out_of_palette(self):
        g = cycle_graph(6)
        c = PartialColoring(6, 3, [1, 2, 3, None, 5, 3])
        kinds = {v.kind for v in verify_strong(g, c)}
        assert UNCOLORED in kinds
        assert OUT_OF_PALETTE in kinds
        assert not is_good(g, c)

    def test_partial_ignores_uncolored(self):
        g = cycle_graph(6)
        c = PartialColoring(6, 3, [1, None, None, None, None, None])
        assert is_good(g, c)
        assert verify_strong(g, c)[0].kind == UNCOLORED

    def test_length_mismatch(self):
        with pytest.raises(GraphArgumentError):
            verify_strong(cycle_graph(5), PartialColoring(4))

    def test_random_colorings_against_brute_force(self):
        rng = random.Random(5)
        g = random_claw_free_subcubic(15, seed=8)
        for _ in range(20):
            c = PartialColoring(g.m, 7, [rng.randint(1, 7) for _ in range(g.m)])
            conflicts = {
                (e, f) for e in range(g.m) for f in range(e + 1, g.m)
                if sees(g, e, f) and c[e] == c[f]
            }
            found = {v.edges for v in verify_strong(g, c)}
            assert found == conflicts

    def test_describe_names_endpoints(self):
        g = cycle_graph(6)
        c = PartialColoring(6, 9, [1, 1, 2, 3, 4, 5])
        text = verify_strong(g, c)[0].describe(g)
        assert text.startswith(SAME_COLOR)
        assert "0-1" in text and "0-5" in text

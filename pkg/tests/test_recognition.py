"""Structural tests and case classification."""

import networkx as nx
import pytest

from modules import recognition as rec
from modules.corpus import (
    catalog, complete_graph, cycle_graph, enumerate_connected_subcubic, gen_k_prism, get,
    random_claw_free_subcubic, triangle_expand,
)
from modules.errors import ClassificationError, GraphArgumentError
from modules.graph_core import Graph


class TestLocalProperties:
    def test_claw_witness(self):
        ok, witness = rec.is_claw_free(get("claw"))
        assert not ok
        assert witness == (0, (1, 2, 3))

    def test_claw_free_catalog(self, claw_free_catalog):
        for name, g in claw_free_catalog.items():
            assert rec.is_claw_free(g)[0], name

    def test_petersen_has_claws(self):
        assert not rec.is_claw_free(get("petersen"))[0]

    def test_subcubic_witness(self):
        assert rec.subcubic_witness(complete_graph(5)) == (0, 4)
        assert rec.subcubic_witness(complete_graph(4)) is None

    def test_cut_vertices_match_networkx(self):
        graphs = [g for n in range(3, 8) for g in enumerate_connected_subcubic(n)]
        graphs += [random_claw_free_subcubic(40, seed) for seed in range(10)]
        for g in graphs:
            assert rec.cut_vertices(g) == set(nx.articulation_points(g.to_networkx()))

    def test_find_c4_prefers_chorded(self):
        witness = rec.find_c4(get("diamond"))
        assert witness.chord is not None
        a, b, c, d = witness.cycle
        assert witness.chord == (a, c)

    def test_find_c4_induced(self, square_ring):
        witness = rec.find_c4(square_ring(2))
        assert witness.chord is None
        a, b, c, d = witness.cycle
        g = square_ring(2)
        assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d) and g.has_edge(d, a)
        assert not g.has_edge(a, c) and not g.has_edge(b, d)

    def test_no_c4(self):
        assert rec.find_c4(get("petersen_delta")) is None
        assert rec.find_c4(cycle_graph(5)) is None


class TestTriangles:
    def test_partition_of_expanded_graph(self):
        g = get("petersen_delta")
        triangles = rec.triangle_partition(g)
        assert len(triangles) == 10
        assert sorted(x for t in triangles for x in t) == list(range(g.n))

    @pytest.mark.parametrize("name, prop", [("k4", "no 4-cycle"), ("paw", "cubic"), ("prism3", "no 4-cycle")])
    def test_partition_preconditions(self, name, prop):
        with pytest.raises(ClassificationError) as info:
            rec.triangle_partition(get(name))
        assert info.value.prop == prop

    @pytest.mark.parametrize("name, length", [("petersen_delta", 10), ("prism4_delta", 8), ("k4_delta", 6)])
    def test_min_induced_even_cycle_length(self, name, length):
        g = get(name)
        frame = rec.min_induced_even_cycle(g)
        assert len(frame.v) == length
        assert frame.p == length // 2

    def test_cycle_frame_labeling(self):
        g = get("petersen_delta")
        frame = rec.min_induced_even_cycle(g)
        n2p = len(frame.v)
        for i in range(n2p):
            assert g.has_edge(frame.v[i], frame.v[(i + 1) % n2p])
        for j in range(frame.p):
            # v_{2j+1}, v_{2j+2} and u_{2j+2} form a triangle
            a, b, u = frame.v[2 * j], frame.v[2 * j + 1], frame.u[j]
            assert g.has_edge(a, b) and g.has_edge(a, u) and g.has_edge(b, u)
            assert g.has_edge(u, frame.w[j])
            assert frame.w[j] not in (a, b)

    def test_rotations_cover_both_orientations(self):
        g = get("prism4_delta")
        frame = rec.min_induced_even_cycle(g)
        rotations = list(rec.cycle_rotations(g, frame))
        assert len(rotations) == 2 * frame.p
        for rotated in rotations:
            assert set(rotated.v) == set(frame.v)
            assert set(rotated.u) == set(frame.u)


class TestIsomorphism:
    def test_relabeled_graphs_are_isomorphic(self):
        g = get("h3")
        perm = list(reversed(range(g.n)))
        assert rec.iso_small(g, g.relabeled(perm))

    def test_size_limit(self):
        big = triangle_expand(gen_k_prism(3))
        with pytest.raises(GraphArgumentError):
            rec.iso_small(big, big)


class TestClassify:
    @pytest.mark.parametrize("name, tag", [
        ("prism3", rec.PRISM3),
        ("k4", rec.K4),
        ("k4_delta", rec.K4_DELTA),
        ("paw", rec.HAS_DEGREE1),
        ("p4", rec.HAS_DEGREE1),
        ("diamond", rec.HAS_DEGREE2),
        ("c6", rec.HAS_DEGREE2),
        ("h1", rec.HAS_DEGREE2),
        ("k4_minus_edge_chain", rec.CUBIC_CUT_VERTEX),
        ("h4", rec.CHORDED_C4),
        ("prism4_delta", rec.TRIANGLE_COVERED),
        ("petersen_delta", rec.TRIANGLE_COVERED),
        ("claw", rec.NOT_CLAW_FREE),
    ])
    def test_catalog_tags(self, name, tag):
        assert rec.classify(get(name)).tag == tag

    def test_not_subcubic(self):
        case = rec.classify(complete_graph(5))
        assert case.tag == rec.NOT_SUBCUBIC
        assert case.witness == {"vertex": 0, "degree": 4}

    def test_edgeless(self):
        assert rec.classify(Graph(1)).tag == rec.EDGELESS

    def test_witnesses(self, diamond_ring, square_ring):
        assert rec.classify(get("paw")).witness == {"v0": 3}
        assert rec.classify(get("k4_minus_edge_chain")).witness == {"v0": 0}
        assert rec.classify(diamond_ring(3)).tag == rec.CHORDED_C4
        assert rec.classify(square_ring(2)).tag == rec.INDUCED_C4

    def test_disconnected_rejected(self):
        with pytest.raises(GraphArgumentError):
            rec.classify(Graph(4, [(0, 1), (2, 3)]))

    def test_every_small_claw_free_graph_gets_a_lemma(self):
        terminal = {rec.NOT_CLAW_FREE, rec.NOT_SUBCUBIC}
        for n in range(1, 8):
            for g in enumerate_connected_subcubic(n):
                tag = rec.classify(g).tag
                assert (tag in terminal) != rec.is_claw_free(g)[0]
                assert tag in rec.TAG_ORDER

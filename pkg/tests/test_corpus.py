"""Generators, catalog, enumeration and random growth."""

import networkx as nx
import pytest

from modules.corpus import (
    catalog, complete_graph, cycle_graph, enumerate_claw_free, enumerate_connected_subcubic,
    gen_k_prism, get, grow_supergraph, random_claw_free_subcubic, random_triangle_expanded, triangle_expand,
)
from modules.errors import GraphArgumentError
from modules.graph_core import Graph
from modules.recognition import CUBIC_CUT_VERTEX, TRIANGLE_COVERED, classify, is_claw_free, is_cubic, iso_small


def _atlas_count(n, claw_free=False):
    count = 0
    claw = nx.star_graph(3)
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() != n or not nx.is_connected(h):
            continue
        if max(d for _, d in h.degree()) > 3:
            continue
        if claw_free and any(
            nx.is_isomorphic(h.subgraph(nodes), claw)
            for v in h for nodes in _stars(h, v)
        ):
            continue
        count += 1
    return count


def _stars(h, v):
    nbrs = list(h.neighbors(v))
    if len(nbrs) == 3:
        yield [v] + nbrs


class TestGenerators:
    def test_prism(self):
        g = gen_k_prism(5)
        assert (g.n, g.m) == (10, 15)
        assert is_cubic(g)

    def test_triangle_expand(self):
        g = triangle_expand(gen_k_prism(4))
        assert (g.n, g.m) == (24, 36)
        assert is_cubic(g)
        assert is_claw_free(g)[0]

    def test_triangle_expand_needs_cubic(self):
        with pytest.raises(GraphArgumentError):
            triangle_expand(cycle_graph(4))

    def test_small_generators(self):
        assert complete_graph(4).m == 6
        with pytest.raises(GraphArgumentError):
            cycle_graph(2)
        with pytest.raises(GraphArgumentError):
            gen_k_prism(2)


class TestCatalog:
    def test_every_entry_is_connected(self):
        for name, entry in catalog().items():
            assert entry.graph.is_connected(), name
            assert entry.graph.max_degree() <= 3, name

    def test_reference_shapes(self):
        assert iso_small(get("prism3"), Graph.from_networkx(nx.circular_ladder_graph(3)))
        assert get("k4_minus_edge_chain").n == 14
        assert is_cubic(get("h4")) and get("h4").n == 8

    def test_unknown_name(self):
        with pytest.raises(GraphArgumentError):
            get("dodecahedron")


class TestEnumeration:
    @pytest.mark.parametrize("n, count", [(0, 0), (1, 1), (2, 1), (3, 2), (4, 6)])
    def test_small_counts(self, n, count):
        assert len(list(enumerate_connected_subcubic(n))) == count

    @pytest.mark.parametrize("n", [5, 6])
    def test_counts_match_graph_atlas(self, n):
        assert len(list(enumerate_connected_subcubic(n))) == _atlas_count(n)
        assert len(list(enumerate_claw_free(n))) == _atlas_count(n, claw_free=True)

    @pytest.mark.slow
    def test_seven_vertices_match_graph_atlas(self):
        assert len(list(enumerate_connected_subcubic(7))) == _atlas_count(7)
        assert len(list(enumerate_claw_free(7))) == _atlas_count(7, claw_free=True)

    def test_one_graph_per_isomorphism_class(self):
        graphs = [g.to_networkx() for g in enumerate_connected_subcubic(6)]
        for i, a in enumerate(graphs):
            for b in graphs[i + 1:]:
                assert not nx.is_isomorphic(a, b)

    def test_deterministic_order(self):
        first = list(enumerate_claw_free(6))
        assert first == list(enumerate_claw_free(6))

    def test_limit(self):
        with pytest.raises(GraphArgumentError):
            list(enumerate_connected_subcubic(11))


class TestRandomGrowth:
    @pytest.mark.parametrize("seed", range(10))
    def test_stays_in_class(self, seed):
        g = random_claw_free_subcubic(50, seed)
        assert 3 <= g.n <= 50
        assert g.is_connected()
        assert g.max_degree() <= 3
        assert is_claw_free(g)[0]

    def test_seeded(self):
        assert random_claw_free_subcubic(40, 9) == random_claw_free_subcubic(40, 9)

    def test_needs_three_vertices(self):
        with pytest.raises(GraphArgumentError):
            random_claw_free_subcubic(2, 0)

    def test_growth_does_not_stall_early(self):
        sizes = sorted(random_claw_free_subcubic(300, seed).n for seed in range(20))
        assert sizes[len(sizes) // 2] >= 150
        assert sizes[-1] <= 300

    @pytest.mark.parametrize("seed", range(10))
    def test_cubic_mode(self, seed):
        g = random_claw_free_subcubic(62, seed, mode="cubic")
        assert g.n == 60 and g.m == 90
        assert g.is_connected() and is_cubic(g)
        assert is_claw_free(g)[0]
        assert classify(g).tag in (TRIANGLE_COVERED, CUBIC_CUT_VERTEX)

    def test_cubic_mode_reaches_triangle_covered(self):
        tags = {classify(random_claw_free_subcubic(60, seed, mode="cubic")).tag for seed in range(10)}
        assert TRIANGLE_COVERED in tags

    def test_cubic_mode_arguments(self):
        with pytest.raises(GraphArgumentError):
            random_claw_free_subcubic(11, 0, mode="cubic")
        with pytest.raises(GraphArgumentError):
            random_claw_free_subcubic(30, 0, mode="lattice")

    def test_triangle_expanded_matches_networkx_seed(self):
        g = random_triangle_expanded(12, seed=77)
        h = Graph.from_networkx(nx.random_regular_graph(3, 12, seed=77))
        assert g == triangle_expand(h)
        assert g.n == 36 and is_cubic(g)
        with pytest.raises(GraphArgumentError):
            random_triangle_expanded(7, seed=0)

    def test_supergraph_contains_base(self):
        base = get("h3")
        big = grow_supergraph(base, 12, seed=1)
        assert big.n >= base.n
        assert set(base.edges) <= set(big.edges)
        assert is_claw_free(big)[0] and big.max_degree() <= 3

    def test_supergraph_rejects_claw(self):
        with pytest.raises(GraphArgumentError):
            grow_supergraph(get("claw"), 5, seed=0)

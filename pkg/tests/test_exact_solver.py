"""Exact strong chromatic index and the surveys built on it."""

import pytest

from modules.corpus import catalog, complete_graph, enumerate_claw_free, get
from modules.errors import GraphArgumentError
from modules.exact_solver import (
    COLORABLE, INDETERMINATE, UNCOLORABLE, SolverConfig, clique_lower_bound, exact_chi_s,
    greedy_clique, strong_color_k, survey_chi_six, survey_cubic_range, survey_extremal,
)
from modules.graph_core import Graph, conflict_graph, verify_strong
from modules.graph_io import write_graph6
from modules.recognition import iso_small


KNOWN = {name: entry.expected_chi_s for name, entry in catalog().items() if entry.expected_chi_s is not None}


@pytest.mark.parametrize("name", sorted(KNOWN))
def test_known_strong_chromatic_indices(name):
    g = get(name)
    result = exact_chi_s(g)
    assert result.chi_s == KNOWN[name]
    assert verify_strong(g, result.coloring) == []
    assert result.coloring.colors_used() == KNOWN[name]
    assert result.lower_bound <= result.chi_s


def test_k4_delta_is_seven_colorable():
    g = get("k4_delta")
    outcome = strong_color_k(g, 7)
    assert outcome.status == COLORABLE
    assert verify_strong(g, outcome.coloring) == []


def test_k4_needs_six():
    assert strong_color_k(complete_graph(4), 5).status == UNCOLORABLE
    assert strong_color_k(complete_graph(4), 6).status == COLORABLE


def test_same_answer_without_symmetry_breaking():
    cfg = SolverConfig(symmetry_breaking=False)
    for name in ("c5", "c7", "h1", "diamond"):
        assert exact_chi_s(get(name), cfg).chi_s == KNOWN[name]


def test_edgeless_graph():
    result = exact_chi_s(Graph(3))
    assert result.chi_s == 0


def test_size_limit():
    with pytest.raises(GraphArgumentError):
        exact_chi_s(get("petersen_delta"))


def test_palette_range():
    with pytest.raises(GraphArgumentError):
        strong_color_k(complete_graph(4), 10)


def test_budget_gives_indeterminate():
    result = exact_chi_s(get("prism4_delta"), SolverConfig(node_budget=1))
    assert result.chi_s is None
    assert result.outcome == INDETERMINATE
    assert result.attempts[-1][1] == INDETERMINATE


def test_kmax_stops_search():
    result = exact_chi_s(get("prism3"), kmax=7)
    assert result.chi_s is None
    assert [status for _, status in result.attempts] == [UNCOLORABLE] * len(result.attempts)


def test_invalid_config():
    with pytest.raises(GraphArgumentError):
        SolverConfig(node_budget=0)


def test_greedy_clique_is_a_clique():
    cg = conflict_graph(get("h3"))
    adj = [set(cg.adj[v]) for v in range(cg.n)]
    clique = greedy_clique(adj)
    assert all(b in adj[a] for a in clique for b in clique if a != b)
    assert clique_lower_bound(get("h3")) == len(clique)


def test_degree_four_graph_uses_generic_conflicts():
    star = Graph(5, [(0, i) for i in range(1, 5)])
    result = exact_chi_s(star)
    assert result.chi_s == 4
    assert result.lower_bound == 4


def test_store_caches_results(store):
    g = get("c7")
    first = exact_chi_s(g, store=store)
    cached = store.get_exact_result(write_graph6(g))
    assert cached["chi_s"] == 4
    assert cached["outcome"] == COLORABLE
    second = exact_chi_s(g, store=store)
    assert second.chi_s == first.chi_s
    assert verify_strong(g, second.coloring) == []


class TestSurveys:
    def test_extremal_small(self):
        found = survey_extremal(5, 7)
        assert len(found) == 1
        assert iso_small(found[0], get("h1"))
        assert exact_chi_s(found[0]).chi_s == 7

    def test_no_claw_free_subcubic_graph_on_six_vertices_needs_nine_except_the_prism(self):
        found = survey_extremal(6, 9)
        assert len(found) == 1
        assert found[0].m == 9

    def test_cubic_range_six(self):
        rows = survey_cubic_range(6)
        cubic = [g for g in enumerate_claw_free(6) if all(g.degree(v) == 3 for v in range(6))]
        assert len(rows) == len(cubic)
        assert 9 in {chi for _, chi in rows}

    def test_chi_six_on_four_vertices(self):
        assert survey_chi_six(4) == [write_graph6(complete_graph(4))]

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [7, 8])
    def test_seven_colors_suffice_on_seven_and_eight_vertices(self, n):
        count = 0
        for g in enumerate_claw_free(n):
            result = exact_chi_s(g, kmax=7)
            assert result.chi_s is not None and result.chi_s <= 7, write_graph6(g)
            assert verify_strong(g, result.coloring) == []
            count += 1
        assert count > 0

    def test_size_limit(self):
        with pytest.raises(GraphArgumentError):
            survey_extremal(11, 7)

"""Levels, compatible orders, the greedy partial coloring and list extension."""

import itertools
import random

import pytest

from modules.corpus import cycle_graph, enumerate_claw_free, get, random_claw_free_subcubic
from modules.errors import GraphArgumentError, GreedyStuck
from modules.graph_core import Graph, PartialColoring, is_good, sees, verify_strong
from modules.partial_color import (
    availability, compatible_order, greedy_extend, greedy_partial, level_map,
    sdr_extend, seen_colors,
)


class TestLevels:
    def test_path_levels(self):
        lm = level_map(Graph(4, [(0, 1), (1, 2), (2, 3)]), [0])
        assert lm.vdist == [0, 1, 2, 3]
        assert [lm.edist(e) for e in range(3)] == [0.5, 1.5, 2.5]

    def test_errors(self):
        with pytest.raises(GraphArgumentError):
            level_map(cycle_graph(5), [])
        with pytest.raises(GraphArgumentError):
            level_map(cycle_graph(5), [7])
        with pytest.raises(GraphArgumentError):
            level_map(Graph(4, [(0, 1), (2, 3)]), [0])

    def test_compatible_order(self):
        g = random_claw_free_subcubic(40, seed=2)
        lm = level_map(g, [0, 5])
        order = compatible_order(lm)
        assert sorted(order) == list(range(g.m))
        levels = [lm.edist2[e] for e in order]
        assert levels == sorted(levels, reverse=True)


class TestGreedy:
    def test_uncolored_set_is_exactly_the_seed_edges(self):
        # seeds of degree at most 2 in claw-free subcubic graphs
        for n in range(3, 8):
            for g in enumerate_claw_free(n):
                for v in range(g.n):
                    if g.degree(v) > 2:
                        continue
                    c = greedy_partial(g, [v])
                    lm = level_map(g, [v])
                    expected = {e for e in range(g.m) if lm.edist2[e] < 2}
                    assert set(c.uncolored()) == expected
                    assert is_good(g, c)

    def test_random_graphs_from_low_degree_seed(self):
        for seed in range(25):
            g = random_claw_free_subcubic(60, seed)
            v = min(range(g.n), key=g.degree)
            if g.degree(v) == 3:
                continue
            c = greedy_partial(g, [v])
            assert is_good(g, c)
            assert all(c[e] is None for e in g.incident(v))

    def test_stuck_reports_edge(self):
        # one color cannot cover a path of three edges
        with pytest.raises(GreedyStuck) as info:
            greedy_partial(Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)]), [0], palette_size=1)
        assert info.value.edge is not None

    def test_greedy_extend(self):
        g = cycle_graph(6)
        c = greedy_extend(g, PartialColoring(6, 3), range(6))
        assert verify_strong(g, c) == []
        with pytest.raises(GreedyStuck):
            greedy_extend(cycle_graph(5), PartialColoring(5, 4), range(5))


class TestAvailability:
    def test_seen_and_available(self):
        g = cycle_graph(6)
        # edges: 01 05 12 23 34 45
        c = PartialColoring(6, 7, [1, None, 2, None, 4, None])
        assert list(seen_colors(g, c, 1)) == [1, 2, 4]
        assert list(availability(g, c, 3)) == [3, 5, 6, 7]

    def test_colored_edge_rejected(self):
        c = PartialColoring(5, 7, [1, None, None, None, None])
        with pytest.raises(GraphArgumentError):
            availability(cycle_graph(5), c, 0)


def _brute_force_extends(g, c, targets):
    lists = [list(availability(g, c, e)) for e in targets]
    pairs = [(i, j) for i, j in itertools.combinations(range(len(targets)), 2)
             if sees(g, targets[i], targets[j])]
    return any(
        all(choice[i] != choice[j] for i, j in pairs)
        for choice in itertools.product(*lists)
    )


def _exhaustive_extends(g, c, targets):
    lists = [list(availability(g, c, e)) for e in targets]
    chosen = []

    def place(i):
        if i == len(targets):
            return True
        for color in lists[i]:
            if all(color != chosen[j] or not sees(g, targets[i], targets[j]) for j in range(i)):
                chosen.append(color)
                if place(i + 1):
                    return True
                chosen.pop()
        return False

    return place(0)


def _random_partial(g, rng, density):
    c = PartialColoring(g.m, 7)
    for e in rng.sample(range(g.m), g.m):
        if rng.random() < density:
            options = list(availability(g, c, e))
            if options:
                c[e] = rng.choice(options)
    return c


class TestSdrExtend:
    def test_empty_targets(self):
        c = PartialColoring(5, 7)
        assert sdr_extend(cycle_graph(5), c, []) == c

    def test_clique_targets_use_matching(self):
        g = get("diamond")
        c = PartialColoring(g.m, 7)
        result = sdr_extend(g, c, list(range(g.m)))
        assert result is not None and verify_strong(g, result) == []

    def test_too_many_pairwise_seeing_targets(self):
        g = get("diamond")
        assert sdr_extend(g, PartialColoring(g.m, 4), list(range(g.m))) is None

    def test_agrees_with_brute_force(self):
        rng = random.Random(13)
        checked = 0
        for seed in range(40):
            g = random_claw_free_subcubic(14, seed)
            c = _random_partial(g, rng, 0.8)
            targets = c.uncolored()[:5]
            if not targets:
                continue
            result = sdr_extend(g, c, targets)
            assert (result is not None) == _brute_force_extends(g, c, targets)
            if result is not None:
                assert is_good(g, result)
                assert all(result[e] is not None for e in targets)
                assert all(result[e] == c[e] for e in range(g.m) if e not in targets)
            checked += 1
        assert checked > 20

    @pytest.mark.slow
    def test_agrees_with_exhaustive_search_on_many_systems(self):
        rng = random.Random(2024)
        outcomes = set()
        checked = 0
        seed = 0
        while checked < 10_000:
            g = random_claw_free_subcubic(rng.randrange(8, 21), seed)
            seed += 1
            c = _random_partial(g, rng, rng.uniform(0.5, 0.95))
            free = c.uncolored()
            if not free:
                continue
            targets = rng.sample(free, min(len(free), rng.randrange(1, 9)))
            result = sdr_extend(g, c, targets)
            expected = _exhaustive_extends(g, c, targets)
            assert (result is not None) == expected, (g.edges, c.assign, targets)
            if result is not None:
                assert is_good(g, result)
            outcomes.add(expected)
            checked += 1
        assert outcomes == {True, False}

    def test_budget_exhaustion_returns_none(self):
        g = random_claw_free_subcubic(30, seed=4)
        targets = list(range(g.m))
        assert sdr_extend(g, PartialColoring(g.m, 7), targets, node_budget=1) is None

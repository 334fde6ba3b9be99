"""
Partial Coloring Module
Distance-to-S leveling, compatible edge orders, the greedy partial coloring,
availability sets and exact extension of a partial coloring over a small
set of target edges.
"""

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence

import networkx as nx

from modules.errors import GraphArgumentError, GreedyStuck
from modules.graph_core import ColorSet, Graph, PartialColoring


@dataclass
class LevelMap:
    """
    Vertex distances to a seed set S and the derived edge levels.

    edist2 holds doubled edge levels, d_S(uv) * 2 = d_S(u) + d_S(v).
    """

    vdist: List[int]
    edist2: List[int]

    def edist(self, e: int) -> float:
        return self.edist2[e] / 2


def level_map(g: Graph, seeds: Iterable[int]) -> LevelMap:
    """
    Multi-source BFS levels.

    Raises:
        GraphArgumentError: empty or out-of-range S, or disconnected g
    """
    seeds = sorted(set(seeds))
    if not seeds:
        raise GraphArgumentError("seed set S must be non-empty")
    for s in seeds:
        if not 0 <= s < g.n:
            raise GraphArgumentError(f"seed {s} is not a vertex")

    vdist = [-1] * g.n
    queue = deque(seeds)
    for s in seeds:
        vdist[s] = 0
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if vdist[y] == -1:
                vdist[y] = vdist[x] + 1
                queue.append(y)
    if -1 in vdist:
        raise GraphArgumentError("level_map needs a connected graph")
    edist2 = [vdist[u] + vdist[v] for u, v in g.edges]
    return LevelMap(vdist, edist2)


def compatible_order(lm: LevelMap) -> List[int]:
    """Edges by level descending, EdgeId ascending within a level (bucket sort)."""
    if not lm.edist2:
        return []
    buckets: List[List[int]] = [[] for _ in range(max(lm.edist2) + 1)]
    for e, d in enumerate(lm.edist2):
        buckets[d].append(e)
    order = []
    for bucket in reversed(buckets):
        order.extend(bucket)
    return order


def seen_colors(g: Graph, c: PartialColoring, e: int) -> ColorSet:
    """F_c(e): colors on edges that see e."""
    bits = 0
    for f in g.seen_edges(e):
        color = c[f]
        if color is not None:
            bits |= 1 << color
    return ColorSet(bits=bits)


def availability(g: Graph, c: PartialColoring, e: int) -> ColorSet:
    """
    A_c(e): palette colors not seen by the uncolored edge e.

    Raises:
        GraphArgumentError: if e is already colored
    """
    g._check_edge(e)
    if c[e] is not None:
        raise GraphArgumentError(f"edge {e} is already colored")
    return ColorSet.palette(c.palette_size) - seen_colors(g, c, e)


def greedy_partial(g: Graph, seeds: Iterable[int], palette_size: int = 7) -> PartialColoring:
    """
    Greedy coloring in an order compatible with d_S.

    Edges with d_S(e) >= 1 get their least available color; edges with
    d_S(e) < 1 stay uncolored.

    Raises:
        GreedyStuck: an edge with d_S(e) >= 1 has no color left
    """
    lm = level_map(g, seeds)
    c = PartialColoring(g.m, palette_size)
    full = ColorSet.palette(palette_size).bits
    for e in compatible_order(lm):
        if lm.edist2[e] < 2:
            continue
        bits = full
        for f in g.seen_edges(e):
            color = c[f]
            if color is not None:
                bits &= ~(1 << color)
        if not bits:
            raise GreedyStuck(e, g.edges[e])
        c[e] = (bits & -bits).bit_length() - 1
    return c


def greedy_extend(g: Graph, c: PartialColoring, order: Iterable[int]) -> PartialColoring:
    """
    Color the given uncolored edges in order with their least available color.

    Raises:
        GreedyStuck: some edge has no color left
    """
    c = c.copy()
    for e in order:
        avail = availability(g, c, e)
        if not avail:
            raise GreedyStuck(e, g.edges[e])
        c[e] = avail.first()
    return c


class _Budget:
    def __init__(self, limit: Optional[int]):
        self.limit = limit
        self.nodes = 0

    def spend(self) -> bool:
        self.nodes += 1
        return self.limit is None or self.nodes <= self.limit


def sdr_extend(g: Graph, c: PartialColoring, targets: Sequence[int],
               node_budget: Optional[int] = None) -> Optional[PartialColoring]:
    """
    Extend c over the target edges, each from its availability list, with
    targets that see each other colored differently.

    Pairwise-seeing targets reduce to a system of distinct representatives,
    decided by bipartite matching; otherwise exact backtracking over the
    lists, smallest list first.

    Args:
        g: Graph
        c: Good partial coloring; targets must be uncolored
        targets: EdgeIds to color
        node_budget: Optional cap on backtracking nodes

    Returns:
        Extended copy of c, or None when no extension exists (or the
        budget ran out)
    """
    targets = list(dict.fromkeys(targets))
    if not targets:
        return c.copy()
    lists: Dict[int, ColorSet] = {e: availability(g, c, e) for e in targets}
    if any(not lst for lst in lists.values()):
        return None

    target_set = set(targets)
    conflicts = {e: [f for f in g.seen_edges(e) if f in target_set] for e in targets}

    if all(len(conflicts[e]) == len(targets) - 1 for e in targets):
        return _match_distinct(c, targets, lists)

    budget = _Budget(node_budget)
    chosen: Dict[int, int] = {}

    def options(e: int) -> List[int]:
        used = {chosen[f] for f in conflicts[e] if f in chosen}
        return [col for col in lists[e] if col not in used]

    def search() -> bool:
        if len(chosen) == len(targets):
            return True
        if not budget.spend():
            return False
        best, best_opts = None, None
        for e in targets:
            if e in chosen:
                continue
            opts = options(e)
            if best_opts is None or len(opts) < len(best_opts):
                best, best_opts = e, opts
                if not opts:
                    return False
        for col in best_opts:
            chosen[best] = col
            if search():
                return True
            del chosen[best]
        return False

    if not search():
        return None
    result = c.copy()
    for e, col in chosen.items():
        result[e] = col
    return result


def _match_distinct(c: PartialColoring, targets: List[int], lists: Dict[int, ColorSet]) -> Optional[PartialColoring]:
    """Distinct representatives by Hopcroft-Karp on the target/color bipartite graph."""
    if len(targets) > c.palette_size:
        return None
    bipartite = nx.Graph()
    left = [('edge', e) for e in targets]
    bipartite.add_nodes_from(left, bipartite=0)
    for e in targets:
        for col in lists[e]:
            bipartite.add_edge(('edge', e), ('color', col))
    matching = nx.bipartite.hopcroft_karp_matching(bipartite, top_nodes=left)
    result = c.copy()
    for node in left:
        partner = matching.get(node)
        if partner is None:
            return None
        result[node[1]] = partner[1]
    return result

"""
Exact Solver Module
Backtracking oracle for strong k-edge-colorability and the strong
chromatic index of small graphs, plus the desk-scale surveys built on it.
"""

import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from modules import logger
from modules.errors import GraphArgumentError
from modules.graph_core import (
    MAX_PALETTE, Graph, PartialColoring, conflict_graph, conflict_graph_generic, verify_strong,
)


COLORABLE = 'Colorable'
UNCOLORABLE = 'Uncolorable'
INDETERMINATE = 'Indeterminate'


@dataclass
class SolverConfig:
    """Search limits for the exact solver."""

    max_edges: int = 40
    node_budget: int = 5_000_000
    time_budget: float = 30.0  # seconds
    symmetry_breaking: bool = True

    def __post_init__(self):
        if self.max_edges <= 0 or self.node_budget <= 0 or self.time_budget <= 0:
            raise GraphArgumentError("solver budgets must be positive")


@dataclass
class SolveOutcome:
    """Result of one strong_color_k call."""

    status: str
    coloring: Optional[PartialColoring] = None
    nodes: int = 0
    seconds: float = 0.0


@dataclass
class ExactResult:
    """Strong chromatic index, or chi_s=None when a budget ran out."""

    chi_s: Optional[int]
    coloring: Optional[PartialColoring] = None
    nodes: int = 0
    seconds: float = 0.0
    lower_bound: int = 0
    attempts: List[Tuple[int, str]] = field(default_factory=list)

    @property
    def outcome(self) -> str:
        return INDETERMINATE if self.chi_s is None else COLORABLE


class _BudgetExceeded(Exception):
    pass


def greedy_clique(adj: List[set]) -> List[int]:
    """
    A clique built greedily: vertices by degree descending, each added if
    adjacent to everything chosen so far.
    """
    order = sorted(range(len(adj)), key=lambda v: (-len(adj[v]), v))
    clique: List[int] = []
    for v in order:
        if all(u in adj[v] for u in clique):
            clique.append(v)
    return clique


def _conflict_adjacency(g: Graph) -> List[set]:
    # neighbor-of-endpoint scan assumes bounded degree
    cg = conflict_graph(g) if g.max_degree() <= 3 else conflict_graph_generic(g)
    return [set(cg.adj[v]) for v in range(cg.n)]


def _check_size(g: Graph, cfg: SolverConfig):
    if g.m > cfg.max_edges:
        raise GraphArgumentError(f"graph has {g.m} edges; exact solver limit is {cfg.max_edges}")


class _DsaturSearch:
    """DSATUR backtracking over the conflict graph with k colors."""

    def __init__(self, adj: List[set], k: int, cfg: SolverConfig):
        self.adj = adj
        self.k = k
        self.cfg = cfg
        self.m = len(adj)
        self.color = [0] * self.m
        # forbid[v][c]: number of colored neighbors of v using color c
        self.forbid = [[0] * (k + 1) for _ in range(self.m)]
        self.saturation = [0] * self.m
        self.nodes = 0
        self.started = time.perf_counter()

    def _set(self, v: int, c: int):
        self.color[v] = c
        for u in self.adj[v]:
            row = self.forbid[u]
            if row[c] == 0:
                self.saturation[u] += 1
            row[c] += 1

    def _unset(self, v: int):
        c = self.color[v]
        self.color[v] = 0
        for u in self.adj[v]:
            row = self.forbid[u]
            row[c] -= 1
            if row[c] == 0:
                self.saturation[u] -= 1

    def _pick(self) -> int:
        best, best_key = -1, None
        for v in range(self.m):
            if self.color[v]:
                continue
            degree = sum(1 for u in self.adj[v] if not self.color[u])
            key = (self.saturation[v], degree, -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.cfg.node_budget:
            raise _BudgetExceeded()
        if self.nodes % 1024 == 0 and time.perf_counter() - self.started > self.cfg.time_budget:
            raise _BudgetExceeded()

    def _search(self, remaining: int, used: int) -> bool:
        if remaining == 0:
            return True
        self._tick()
        v = self._pick()
        if self.saturation[v] >= self.k:
            return False
        top = min(self.k, used + 1) if self.cfg.symmetry_breaking else self.k
        row = self.forbid[v]
        for c in range(1, top + 1):
            if row[c]:
                continue
            self._set(v, c)
            if self._search(remaining - 1, max(used, c)):
                return True
            self._unset(v)
        return False

    def run(self) -> bool:
        used = 0
        fixed = 0
        if self.cfg.symmetry_breaking:
            clique = greedy_clique(self.adj)
            if len(clique) > self.k:
                return False
            for i, v in enumerate(clique, start=1):
                self._set(v, i)
            used = fixed = len(clique)
        return self._search(self.m - fixed, used)


def strong_color_k(g: Graph, k: int, cfg: Optional[SolverConfig] = None) -> SolveOutcome:
    """
    Decide whether g has a strong k-edge-coloring.

    Args:
        g: Graph with at most cfg.max_edges edges
        k: Palette size, 1..9
        cfg: Search limits

    Returns:
        SolveOutcome; Colorable carries a verified coloring

    Raises:
        GraphArgumentError: size limit exceeded or k outside 1..9
    """
    cfg = cfg or SolverConfig()
    _check_size(g, cfg)
    if not 1 <= k <= MAX_PALETTE:
        raise GraphArgumentError(f"k must be in 1..{MAX_PALETTE}, got {k}")

    started = time.perf_counter()
    if g.m == 0:
        return SolveOutcome(COLORABLE, PartialColoring(0, k), 0, 0.0)

    search = _DsaturSearch(_conflict_adjacency(g), k, cfg)
    try:
        found = search.run()
    except _BudgetExceeded:
        seconds = time.perf_counter() - started
        logger.log_solver(repr(g), k, INDETERMINATE, search.nodes, seconds)
        return SolveOutcome(INDETERMINATE, None, search.nodes, seconds)

    seconds = time.perf_counter() - started
    if not found:
        logger.log_solver(repr(g), k, UNCOLORABLE, search.nodes, seconds)
        return SolveOutcome(UNCOLORABLE, None, search.nodes, seconds)

    coloring = PartialColoring(g.m, k, search.color)
    violations = verify_strong(g, coloring)
    if violations:
        raise AssertionError(f"solver produced an invalid coloring: {violations[0].describe(g)}")
    logger.log_solver(repr(g), k, COLORABLE, search.nodes, seconds)
    return SolveOutcome(COLORABLE, coloring, search.nodes, seconds)


def clique_lower_bound(g: Graph) -> int:
    """Size of a greedy clique of the conflict graph."""
    if g.m == 0:
        return 0
    return len(greedy_clique(_conflict_adjacency(g)))


def exact_chi_s(g: Graph, cfg: Optional[SolverConfig] = None, store=None,
                kmax: int = MAX_PALETTE) -> ExactResult:
    """
    Strong chromatic index by ascending search from the clique lower bound.

    Args:
        g: Graph with at most cfg.max_edges edges
        cfg: Search limits
        store: Optional ResultStore consulted and updated by graph6 key
        kmax: Highest palette size tried

    Returns:
        ExactResult; chi_s is None when a budget ran out or kmax was reached

    Raises:
        GraphArgumentError: size limit exceeded, or a clique needs more
            than 9 colors
    """
    cfg = cfg or SolverConfig()
    _check_size(g, cfg)

    key = None
    if store is not None:
        from modules.graph_io import write_graph6

        key = write_graph6(g)
        cached = store.get_exact_result(key)
        if cached and cached.get('chi_s') is not None:
            certificate = cached.get('certificate')
            coloring = PartialColoring(g.m, cached['chi_s'], certificate) if certificate else None
            return ExactResult(cached['chi_s'], coloring, cached.get('nodes', 0), cached.get('seconds', 0.0),
                               clique_lower_bound(g))

    lower = clique_lower_bound(g)
    if lower > MAX_PALETTE:
        raise GraphArgumentError(f"conflict graph has a clique of size {lower}; palette limit is {MAX_PALETTE}")
    result = ExactResult(None, lower_bound=lower)
    if g.m == 0:
        result.chi_s = 0
        result.coloring = PartialColoring(0, 1)
    else:
        for k in range(max(lower, 1), min(kmax, MAX_PALETTE) + 1):
            outcome = strong_color_k(g, k, cfg)
            result.nodes += outcome.nodes
            result.seconds += outcome.seconds
            result.attempts.append((k, outcome.status))
            if outcome.status == COLORABLE:
                result.chi_s = k
                result.coloring = outcome.coloring
                break
            if outcome.status == INDETERMINATE:
                break

    if store is not None and key is not None:
        store.save_exact_result(key, g.n, g.m, result.chi_s, result.outcome, result.nodes, result.seconds,
                                result.coloring.assign if result.coloring else None)
    return result


# ----------------------------------------------------------------------
# Surveys
# ----------------------------------------------------------------------

def _check_survey_size(n: int):
    from modules.corpus import ENUMERATION_MAX_VERTICES

    if not 0 <= n <= ENUMERATION_MAX_VERTICES:
        raise GraphArgumentError(f"surveys limited to n <= {ENUMERATION_MAX_VERTICES}, got {n}")


def survey_extremal(n: int, target_chi: int, cfg: Optional[SolverConfig] = None) -> List[Graph]:
    """
    Connected claw-free subcubic graphs on n vertices with strong chromatic
    index target_chi, one per isomorphism class.

    Raises:
        GraphArgumentError: n > 10
    """
    from modules.corpus import enumerate_claw_free

    _check_survey_size(n)
    found = []
    for g in enumerate_claw_free(n):
        result = exact_chi_s(g, cfg)
        if result.chi_s == target_chi:
            found.append(g)
    logger.info(f"survey_extremal(n={n}, chi={target_chi}): {len(found)} graphs")
    return found


def _claw_free_cubic(n: int):
    from modules.corpus import enumerate_claw_free
    from modules.recognition import is_cubic

    for g in enumerate_claw_free(n):
        if is_cubic(g):
            yield g


def survey_cubic_range(n: int, cfg: Optional[SolverConfig] = None) -> List[Tuple[str, Optional[int]]]:
    """
    Exact strong chromatic index of every connected claw-free cubic graph on n vertices.

    Returns:
        (graph6, chi_s) pairs; chi_s is None for Indeterminate
    """
    from modules.graph_io import write_graph6

    _check_survey_size(n)
    return [(write_graph6(g), exact_chi_s(g, cfg).chi_s) for g in _claw_free_cubic(n)]


def survey_chi_six(n: int, cfg: Optional[SolverConfig] = None) -> List[str]:
    """graph6 codes of connected claw-free cubic graphs on n vertices with strong chromatic index 6."""
    return [code for code, chi in survey_cubic_range(n, cfg) if chi == 6]


def question1_table(ks: List[int], cfg: Optional[SolverConfig] = None) -> List[Dict]:
    """
    Exact strong chromatic index of triangle-expanded k-prisms.

    The edge limit is raised to each instance's size; node and time budgets
    still apply.
    """
    from modules.corpus import gen_k_prism, triangle_expand

    cfg = cfg or SolverConfig()
    rows = []
    for k in ks:
        h = triangle_expand(gen_k_prism(k))
        local = SolverConfig(max(cfg.max_edges, h.m), cfg.node_budget, cfg.time_budget, cfg.symmetry_breaking)
        result = exact_chi_s(h, local)
        rows.append({
            'k': k,
            'n': h.n,
            'm': h.m,
            'chi_s': result.chi_s,
            'outcome': result.outcome,
            'lower_bound': result.lower_bound,
            'nodes': result.nodes,
            'seconds': round(result.seconds, 3),
            'certificate': result.coloring.assign if result.coloring else None,
        })
        logger.info(f"question1 k={k}: chi_s={result.chi_s if result.chi_s is not None else INDETERMINATE}")
    return rows

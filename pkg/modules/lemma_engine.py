"""
Lemma Engine Module
Drives each connected component through the case analysis: classify,
dispatch to the matching extension lemma, verify. Components isomorphic to
the 3-prism get the fixed 9-coloring and are flagged exceptional.
"""

import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set

from modules import logger
from modules.errors import (
    GraphArgumentError, InternalInvariantViolation, NotClawFreeError, NotSubcubicError,
)
from modules.exact_solver import SolverConfig, clique_lower_bound, exact_chi_s
from modules.graph_core import Graph, PartialColoring, is_good, verify_strong
from modules.lemmas import (
    LemmaFrame, LemmaOutcome, extend_chorded_c4, extend_cut_vertex, extend_degree1,
    extend_degree2, extend_even_cycle, extend_induced_c4, permute_colors,
)
from modules.partial_color import sdr_extend
from modules.recognition import (
    CHORDED_C4, CUBIC_CUT_VERTEX, EDGELESS, HAS_DEGREE1, HAS_DEGREE2, INDUCED_C4, K4, K4_DELTA,
    NOT_CLAW_FREE, NOT_SUBCUBIC, PRISM3, TRIANGLE_COVERED, CaseTag, classify, is_claw_free,
    subcubic_witness,
)

__all__ = [
    'ColoringResult', 'EngineSettings', 'StrongColorEngine', 'TraceRecord', 'color_component',
    'lower_bound', 'permute_colors', 'prism3_coloring', 'small_case_solve', 'strong_color',
]

SMALL_CASE = 'SmallCase'
MAX_DEPTH = 2


@dataclass
class TraceRecord:
    """One dispatch: the case tag, its witness and the bound lemma frame."""

    tag: str
    witness: Dict = field(default_factory=dict)
    frame: Dict = field(default_factory=dict)
    depth: int = 0
    fallback: Optional[str] = None

    def to_dict(self) -> Dict:
        record = {
            'tag': self.tag,
            'witness': {k: list(v) if isinstance(v, tuple) else v for k, v in self.witness.items()},
            'frame': self.frame,
            'depth': self.depth,
        }
        if self.fallback:
            record['fallback'] = self.fallback
        return record


@dataclass
class ColoringResult:
    """Total coloring with its trace; components holds per-component results of strong_color."""

    coloring: PartialColoring
    colors_used: int
    exceptional: bool = False
    trace: List[TraceRecord] = field(default_factory=list)
    components: List['ColoringResult'] = field(default_factory=list)
    seconds: float = 0.0


@dataclass
class EngineSettings:
    """Fallback and repair limits of the engine."""

    fallback_max_edges: int = 40
    subcase_iteration_cap: int = 6
    repair_radius: int = 2
    repair_node_budget: int = 200_000
    solver: SolverConfig = field(default_factory=SolverConfig)

    @classmethod
    def from_config(cls, config_manager) -> 'EngineSettings':
        section = config_manager.get_engine_settings()
        return cls(
            fallback_max_edges=int(section.get('fallback_max_edges', 40)),
            subcase_iteration_cap=int(section.get('subcase_iteration_cap', 6)),
            repair_radius=int(section.get('repair_radius', 2)),
            repair_node_budget=int(section.get('repair_node_budget', 200_000)),
            solver=config_manager.get_solver_config(),
        )


def prism3_coloring(g: Graph) -> PartialColoring:
    """Colors 1..9 in EdgeId order; all nine prism edges see each other."""
    if g.m != 9:
        raise GraphArgumentError(f"3-prism has 9 edges, got {g.m}")
    return PartialColoring(9, 9, list(range(1, 10)))


def lower_bound(g: Graph) -> int:
    """Greedy clique size in the conflict graph."""
    return clique_lower_bound(g)


class StrongColorEngine:
    """Strong 7-edge-colorer for claw-free subcubic graphs."""

    def __init__(self, settings: Optional[EngineSettings] = None):
        self.settings = settings or EngineSettings()
        self.depth = 0

    # ------------------------------------------------------------------
    # Whole graph
    # ------------------------------------------------------------------

    def strong_color(self, g: Graph) -> ColoringResult:
        """
        Color every component and verify the merged coloring.

        Args:
            g: Claw-free subcubic graph, possibly disconnected

        Returns:
            ColoringResult over g; palette 9 if some component is a 3-prism

        Raises:
            NotClawFreeError: with the claw center and leaves
            NotSubcubicError: with a vertex of degree > 3
            InternalInvariantViolation: a lemma step failed beyond recovery
        """
        started = time.perf_counter()
        ok, claw = is_claw_free(g)
        if not ok:
            raise NotClawFreeError(*claw)
        heavy = subcubic_witness(g)
        if heavy is not None:
            raise NotSubcubicError(*heavy)

        parts = []
        for vertices, sub, edge_back in _split_components(g):
            if sub.m == 0:
                continue
            self.depth = 0
            tag = classify(sub)
            if tag.tag == PRISM3:
                result = self._prism3_result(sub, tag)
            else:
                result = self.color_component(sub)
            parts.append((result, edge_back))

        exceptional = any(r.exceptional for r, _ in parts)
        merged = PartialColoring(g.m, 9 if exceptional else 7)
        trace: List[TraceRecord] = []
        for result, edge_back in parts:
            for e, color in enumerate(result.coloring.assign):
                merged[edge_back[e]] = color
            trace.extend(result.trace)

        violations = verify_strong(g, merged)
        if violations:
            raise InternalInvariantViolation(
                f"merged coloring fails verification: {violations[0].describe(g)}", trace=trace)
        seconds = time.perf_counter() - started
        logger.debug(f"strong_color {g!r}: {merged.colors_used()} colors, "
                     f"{len(parts)} components, {seconds:.3f}s")
        return ColoringResult(merged, merged.colors_used(), exceptional, trace,
                              [r for r, _ in parts], seconds)

    def _prism3_result(self, g: Graph, tag: CaseTag) -> ColoringResult:
        coloring = prism3_coloring(g)
        logger.log_lemma(PRISM3, 'DONE', "exceptional component, 9 colors")
        return ColoringResult(coloring, 9, True, [TraceRecord(tag.tag, depth=self.depth)])

    # ------------------------------------------------------------------
    # One component
    # ------------------------------------------------------------------

    def color_component(self, g: Graph, depth: int = 0) -> ColoringResult:
        """
        Classify a connected component and run the matching lemma.

        Raises:
            GraphArgumentError: g is disconnected
            NotClawFreeError / NotSubcubicError: g outside the class
            InternalInvariantViolation: a lemma step failed beyond recovery
        """
        if depth > MAX_DEPTH:
            raise InternalInvariantViolation(f"recursion depth {depth} exceeds {MAX_DEPTH}")
        tag = classify(g)
        if tag.tag == NOT_CLAW_FREE:
            raise NotClawFreeError(tag.witness['center'], tag.witness['leaves'])
        if tag.tag == NOT_SUBCUBIC:
            raise NotSubcubicError(tag.witness['vertex'], tag.witness['degree'])
        if tag.tag == EDGELESS:
            return ColoringResult(PartialColoring(0), 0, False, [TraceRecord(EDGELESS, depth=depth)])
        if tag.tag == PRISM3:
            return self._prism3_result(g, tag)

        outer = self.depth
        self.depth = depth
        logger.log_lemma(tag.tag, 'DISPATCH', f"{g!r} {tag}")
        record = TraceRecord(tag.tag, dict(tag.witness), depth=depth)
        try:
            try:
                outcome = self._dispatch(g, tag)
            except InternalInvariantViolation as exc:
                logger.log_lemma(tag.tag, 'FAILED', str(exc))
                outcome = self._recover(g, tag, exc)
                record.fallback = outcome.fallback
        finally:
            self.depth = outer

        record.frame = outcome.frame.summary()
        coloring = outcome.coloring
        if coloring.palette_size != 7 or not coloring.is_total() or not is_good(g, coloring):
            raise InternalInvariantViolation(f"{tag.tag} produced an invalid coloring of {g!r}",
                                             trace=[record], frame=record.frame)
        logger.log_lemma(tag.tag, 'DONE', f"{coloring.colors_used()} colors")
        return ColoringResult(coloring, coloring.colors_used(), False, [record] + list(outcome.children))

    def _dispatch(self, g: Graph, tag: CaseTag) -> LemmaOutcome:
        w = tag.witness
        if tag.tag in (K4, K4_DELTA):
            result = self.small_case_solve(g)
            return LemmaOutcome(result.coloring, LemmaFrame(tag.tag))
        if tag.tag == HAS_DEGREE1:
            return extend_degree1(self, g, w['v0'])
        if tag.tag == HAS_DEGREE2:
            return extend_degree2(self, g, w['v0'])
        if tag.tag == CUBIC_CUT_VERTEX:
            return extend_cut_vertex(self, g, w['v0'])
        if tag.tag == CHORDED_C4:
            return extend_chorded_c4(self, g, w['cycle'])
        if tag.tag == INDUCED_C4:
            return extend_induced_c4(self, g, w['cycle'])
        if tag.tag == TRIANGLE_COVERED:
            return extend_even_cycle(self, g)
        raise GraphArgumentError(f"no lemma for case {tag.tag}")

    # ------------------------------------------------------------------
    # Fallbacks
    # ------------------------------------------------------------------

    def _recover(self, g: Graph, tag: CaseTag, exc: InternalInvariantViolation) -> LemmaOutcome:
        if g.m <= self.settings.fallback_max_edges:
            logger.log_fallback(repr(g), f"{tag.tag}: {exc}; exact solve")
            result = self.small_case_solve(g)
            frame = LemmaFrame(tag.tag, notes=[f"exact fallback after: {exc}"])
            return LemmaOutcome(result.coloring, frame, fallback='small_case_solve')

        if exc.graph is not g or exc.partial is None:
            raise exc
        repaired = self._local_repair(g, exc)
        if repaired is None:
            raise exc
        logger.log_fallback(repr(g), f"{tag.tag}: {exc}; local repair")
        frame = LemmaFrame(tag.tag, dict(exc.frame.get('vertices', {})), dict(exc.frame.get('edges', {})),
                           notes=[f"local repair after: {exc}"])
        return LemmaOutcome(repaired, frame, fallback='local_repair')

    def _local_repair(self, g: Graph, exc: InternalInvariantViolation) -> Optional[PartialColoring]:
        """
        Uncolor every edge within repair_radius of the failing frame and of
        the uncolored edges, then extend exactly under repair_node_budget.
        """
        partial: PartialColoring = exc.partial
        if len(partial) != g.m or not is_good(g, partial):
            return None
        core: Set[int] = set(exc.frame.get('edges', {}).values()) | set(partial.uncolored())
        reach = {x for e in core for x in g.edges[e]}
        frontier = set(reach)
        for _ in range(self.settings.repair_radius):
            frontier = {y for x in frontier for y in g.adj[x]} - reach
            reach |= frontier
        targets = [e for e, (u, v) in enumerate(g.edges) if u in reach or v in reach]
        start = partial.copy()
        for e in targets:
            start[e] = None
        logger.debug(f"local repair over {len(targets)} edges of {g!r}")
        return sdr_extend(g, start, targets, node_budget=self.settings.repair_node_budget)

    def small_case_solve(self, g: Graph) -> ColoringResult:
        """
        Minimum strong coloring of a small graph by the exact solver.

        Raises:
            GraphArgumentError: g has more than fallback_max_edges edges
            InternalInvariantViolation: more than 7 colors needed, or budget exhausted
        """
        if g.m > self.settings.fallback_max_edges:
            raise GraphArgumentError(f"small_case_solve limited to {self.settings.fallback_max_edges} edges, "
                                     f"got {g.m}")
        cfg = self.settings.solver
        if cfg.max_edges < g.m:
            cfg = SolverConfig(g.m, cfg.node_budget, cfg.time_budget, cfg.symmetry_breaking)
        result = exact_chi_s(g, cfg, kmax=7)
        if result.chi_s is None:
            raise InternalInvariantViolation(f"no strong 7-coloring found for {g!r} ({result.attempts})")
        coloring = PartialColoring(g.m, 7, result.coloring.assign)
        trace = [TraceRecord(SMALL_CASE, {'chi_s': result.chi_s}, depth=self.depth)]
        return ColoringResult(coloring, coloring.colors_used(), False, trace)


def _split_components(g: Graph):
    """(vertices, subgraph, edge_back) per component, in one pass over the edges."""
    comps = g.components()
    comp_of = [0] * g.n
    local = [0] * g.n
    for ci, comp in enumerate(comps):
        for i, v in enumerate(comp):
            comp_of[v] = ci
            local[v] = i
    edges: List[List] = [[] for _ in comps]
    backs: List[List[int]] = [[] for _ in comps]
    for e, (u, v) in enumerate(g.edges):
        ci = comp_of[u]
        edges[ci].append((local[u], local[v]))
        backs[ci].append(e)
    for ci, comp in enumerate(comps):
        # edges arrive in sorted order, so local EdgeIds follow the same order
        yield comp, Graph(len(comp), edges[ci]), backs[ci]


_default_engine: Optional[StrongColorEngine] = None


def _engine() -> StrongColorEngine:
    global _default_engine
    if _default_engine is None:
        _default_engine = StrongColorEngine()
    return _default_engine


def strong_color(g: Graph, settings: Optional[EngineSettings] = None) -> ColoringResult:
    engine = StrongColorEngine(settings) if settings else _engine()
    return engine.strong_color(g)


def color_component(g: Graph, settings: Optional[EngineSettings] = None) -> ColoringResult:
    engine = StrongColorEngine(settings) if settings else _engine()
    return engine.color_component(g)


def small_case_solve(g: Graph, settings: Optional[EngineSettings] = None) -> ColoringResult:
    engine = StrongColorEngine(settings) if settings else _engine()
    return engine.small_case_solve(g)

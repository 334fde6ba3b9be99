"""
Batch Runner Module
Colors a stream of graphs, re-verifies every coloring and aggregates the
records into a RunReport; also times the engine on growing graph families.
"""

import concurrent.futures
import random
import statistics
import time
from dataclasses import asdict, dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from tqdm import tqdm

from modules import logger
from modules.errors import GraphArgumentError, GraphParseError, InternalInvariantViolation, StrongColorError
from modules.graph_core import Graph, verify_strong
from modules.graph_io import parse_graph6
from modules.lemma_engine import EngineSettings, StrongColorEngine, lower_bound


@dataclass
class GraphRecord:
    """Outcome for one input graph; verified is recomputed from the coloring."""

    input_id: str
    n: int = 0
    m: int = 0
    colors_used: Optional[int] = None
    exceptional: bool = False
    verified: bool = False
    trace: List[Dict] = field(default_factory=list)
    seconds: float = 0.0
    lower_bound: Optional[int] = None
    error: Optional[str] = None

    def to_dict(self) -> Dict:
        return asdict(self)


@dataclass
class RunReport:
    """Records in input order plus the aggregate summary."""

    records: List[GraphRecord] = field(default_factory=list)
    label: str = ''

    @property
    def failures(self) -> List[GraphRecord]:
        return [r for r in self.records if r.error or not r.verified]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> Dict:
        colored = [r for r in self.records if r.colors_used is not None]
        return {
            'total': len(self.records),
            'verified': sum(1 for r in self.records if r.verified),
            'exceptional': sum(1 for r in self.records if r.exceptional),
            'errors': sum(1 for r in self.records if r.error),
            'max_colors': max((r.colors_used for r in colored), default=None),
            'seconds': round(sum(r.seconds for r in self.records), 6),
        }

    def to_dict(self) -> Dict:
        return {
            'label': self.label,
            'summary': self.summary(),
            'records': [r.to_dict() for r in self.records],
        }


def color_graph(input_id: str, g: Graph, settings: Optional[EngineSettings] = None) -> GraphRecord:
    """Color one graph and verify the result independently of the engine."""
    record = GraphRecord(input_id, g.n, g.m)
    started = time.perf_counter()
    try:
        result = StrongColorEngine(settings).strong_color(g)
    except StrongColorError as e:
        record.error = f"{type(e).__name__}: {e}"
        if isinstance(e, InternalInvariantViolation):
            record.trace = [t.to_dict() if hasattr(t, 'to_dict') else t for t in e.trace]
        record.seconds = time.perf_counter() - started
        return record

    record.seconds = time.perf_counter() - started
    record.colors_used = result.colors_used
    record.exceptional = result.exceptional
    record.trace = [t.to_dict() for t in result.trace]
    limit = 9 if result.exceptional else 7
    record.verified = not verify_strong(g, result.coloring) and result.colors_used <= limit
    if g.m and g.m <= 2000:
        record.lower_bound = lower_bound(g)
    return record


def color_line(item: Tuple[str, str], settings: Optional[EngineSettings] = None) -> GraphRecord:
    """Parse one graph6 line and color it; parse failures become error records."""
    input_id, line = item
    try:
        g = parse_graph6(line)
    except GraphParseError as e:
        return GraphRecord(input_id, error=f"GraphParseError: {e}")
    return color_graph(input_id, g, settings)


class BatchRunner:
    """Colors graph6 streams, optionally across worker processes."""

    def __init__(self, settings: Optional[EngineSettings] = None, parallel: int = 1, progress: bool = True):
        """
        Initialize batch runner.

        Args:
            settings: Engine settings passed to every worker
            parallel: Worker processes; 1 runs in-process
            progress: Show a tqdm progress bar
        """
        self.settings = settings or EngineSettings()
        self.parallel = max(1, int(parallel))
        self.progress = progress

    def run(self, lines: Iterable[str], label: str = '') -> RunReport:
        """
        Color every non-blank line of a graph6 stream.

        Returns:
            RunReport with records in input order
        """
        items = [(f"line{i}", line.strip()) for i, line in enumerate(lines, start=1)
                 if line.strip()]
        logger.log_operation("Batch", "STARTED", f"{len(items)} graphs, parallel={self.parallel}")
        report = RunReport(label=label)

        if self.parallel == 1 or len(items) < 2:
            for item in tqdm(items, desc="Coloring", disable=not self.progress):
                report.records.append(color_line(item, self.settings))
        else:
            with concurrent.futures.ProcessPoolExecutor(max_workers=self.parallel) as executor:
                futures = [executor.submit(color_line, item, self.settings) for item in items]
                with tqdm(total=len(futures), desc="Coloring", disable=not self.progress) as pbar:
                    for future in concurrent.futures.as_completed(futures):
                        pbar.update(1)
                report.records = [f.result() for f in futures]

        summary = report.summary()
        status = "SUCCESS" if report.ok else "FAILED"
        logger.log_operation("Batch", status, f"{summary['verified']}/{summary['total']} verified, "
                                              f"{summary['errors']} errors")
        return report

    def run_graphs(self, graphs: Sequence[Tuple[str, Graph]], label: str = '') -> RunReport:
        """Color already-parsed graphs in-process."""
        report = RunReport(label=label)
        for input_id, g in tqdm(graphs, desc="Coloring", disable=not self.progress):
            report.records.append(color_graph(input_id, g, self.settings))
        return report


# ----------------------------------------------------------------------
# Benchmarks
# ----------------------------------------------------------------------

BENCH_FAMILIES = ('expanded-prism', 'random', 'random-cubic')


def bench_graph(family: str, size: int, seed: int = 7) -> Graph:
    """
    Graph of roughly `size` edges from a family.

    expanded-prism: triangle expansion of the k-prism, 9k edges.
    random: seeded claw-free subcubic growth on about 2*size/3 vertices.
    random-cubic: triangle expansion of a connected random cubic graph, 3/2 edges per vertex.
    """
    from modules.corpus import gen_k_prism, random_claw_free_subcubic, triangle_expand

    if family == 'expanded-prism':
        return triangle_expand(gen_k_prism(max(3, round(size / 9))))
    if family == 'random':
        return random_claw_free_subcubic(max(3, 2 * size // 3), seed)
    if family == 'random-cubic':
        return random_claw_free_subcubic(max(12, 2 * size // 3), seed, mode='cubic')
    raise GraphArgumentError(f"unknown bench family {family!r}; expected one of {BENCH_FAMILIES}")


def bench(family: str, sizes: Sequence[int], repeats: int = 3, seed: int = 7,
          settings: Optional[EngineSettings] = None) -> List[Dict]:
    """
    Median wall time of strong_color per size, with the ratio to the previous size.

    Returns:
        One row per size: size, n, m, median_seconds, edges_per_second, doubling_ratio
    """
    if list(sizes) != sorted(sizes):
        raise GraphArgumentError("bench sizes must be ascending")
    engine = StrongColorEngine(settings)
    rows: List[Dict] = []
    rng = random.Random(seed)
    for size in sizes:
        g = bench_graph(family, size, rng.randrange(1 << 30))
        times = []
        for _ in range(max(1, repeats)):
            started = time.perf_counter()
            engine.strong_color(g)
            times.append(time.perf_counter() - started)
        median = statistics.median(times)
        row = {
            'size': size,
            'n': g.n,
            'm': g.m,
            'median_seconds': round(median, 6),
            'edges_per_second': round(g.m / median, 1) if median > 0 else None,
            'doubling_ratio': None,
        }
        if rows and rows[-1]['median_seconds'] > 0:
            prev = rows[-1]
            # normalize to an exact doubling of the edge count
            scale = (g.m / prev['m']) / 2 if prev['m'] else 1.0
            row['doubling_ratio'] = round(median / prev['median_seconds'] / scale, 3)
        rows.append(row)
        logger.info(f"bench {family} m={g.m}: {median:.4f}s")
    return rows

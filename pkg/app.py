#!/usr/bin/env python3
"""
StrongColor
Command-line entry point: strong 7-edge-colorings of claw-free subcubic graphs.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from modules import logger
from modules.batch_runner import BENCH_FAMILIES, BatchRunner, bench
from modules.config_manager import ConfigManager
from modules.errors import (
    GraphArgumentError, GraphParseError, InternalInvariantViolation, NotClawFreeError, NotSubcubicError,
)
from modules.exact_solver import SolverConfig, exact_chi_s, question1_table, survey_chi_six, \
    survey_cubic_range, survey_extremal
from modules.graph_core import PartialColoring, verify_strong
from modules.graph_io import parse_coloring, parse_graph, write_graph6
from modules.lemma_engine import EngineSettings, StrongColorEngine
from modules.report_generator import ReportGenerator
from modules.result_store import ResultStore


EXIT_OK = 0
EXIT_PARSE = 1
EXIT_NOT_IN_CLASS = 2
EXIT_EXCEPTIONAL = 3
EXIT_INTERNAL = 4
EXIT_VIOLATIONS = 5


def _read_input(path: str) -> str:
    if path in (None, '-'):
        return sys.stdin.read()
    return Path(path).read_text(encoding='utf-8')


class StrongColorApp:
    """Main application controller."""

    def __init__(self, config_dir: str = None):
        """Initialize configuration, logging and the engine settings."""
        self.config_manager = ConfigManager(config_dir)
        paths = self.config_manager.get_paths()
        quiet = self.config_manager.get_app_settings().get('quiet', False)
        logger.configure(paths.get('log_dir'), quiet)
        self.settings = EngineSettings.from_config(self.config_manager)
        self._store = None

    @property
    def store(self) -> ResultStore:
        if self._store is None:
            self._store = ResultStore(self.config_manager.get_paths().get('store_path'))
        return self._store

    def close(self):
        if self._store is not None:
            self._store.close()
            self._store = None

    # ------------------------------------------------------------------
    # color / verify / exact
    # ------------------------------------------------------------------

    def cmd_color(self, args) -> int:
        """Color one graph; prints 'u v color' lines or the JSON document."""
        try:
            g = parse_graph(_read_input(args.input), args.format)
        except GraphParseError as e:
            print(f"parse error: {e}", file=sys.stderr)
            return EXIT_PARSE

        logger.log_operation("Color", "STARTED", repr(g))
        try:
            result = StrongColorEngine(self.settings).strong_color(g)
        except NotClawFreeError as e:
            print(f"not claw-free: claw centered at {e.center} with leaves {list(e.leaves)}", file=sys.stderr)
            return EXIT_NOT_IN_CLASS
        except NotSubcubicError as e:
            print(f"not subcubic: vertex {e.vertex} has degree {e.degree}", file=sys.stderr)
            return EXIT_NOT_IN_CLASS
        except InternalInvariantViolation as e:
            logger.log_operation("Color", "FAILED", str(e))
            print(f"internal error: {e}", file=sys.stderr)
            return EXIT_INTERNAL

        violations = verify_strong(g, result.coloring)
        if violations:
            logger.log_operation("Color", "FAILED", violations[0].describe(g))
            print(f"internal error: {violations[0].describe(g)}", file=sys.stderr)
            return EXIT_INTERNAL

        if args.json:
            document = {
                'edges': [[u, v, result.coloring[e]] for e, (u, v) in enumerate(g.edges)],
                'colors_used': result.colors_used,
                'exceptional': result.exceptional,
                'trace': [t.to_dict() for t in result.trace],
            }
            print(json.dumps(document, indent=2 if args.trace else None))
        else:
            for e, (u, v) in enumerate(g.edges):
                print(f"{u} {v} {result.coloring[e]}")
            if args.trace:
                for t in result.trace:
                    print(f"# {'  ' * t.depth}{t.tag} {json.dumps(t.witness)}"
                          + (f" fallback={t.fallback}" if t.fallback else ""))
        logger.log_operation("Color", "SUCCESS", f"{result.colors_used} colors")
        return EXIT_EXCEPTIONAL if result.exceptional else EXIT_OK

    def cmd_verify(self, args) -> int:
        """Check a coloring file against a graph; lists every violation."""
        try:
            g = parse_graph(_read_input(args.graph), args.format)
            colors = parse_coloring(Path(args.coloring).read_text(encoding='utf-8'), g)
        except GraphParseError as e:
            print(f"parse error: {e}", file=sys.stderr)
            return EXIT_PARSE

        violations = verify_strong(g, PartialColoring(g.m, args.palette, colors))
        for v in violations:
            print(v.describe(g))
        if violations:
            print(f"{len(violations)} violations", file=sys.stderr)
            return EXIT_VIOLATIONS
        print("ok")
        return EXIT_OK

    def _solver_config(self, args) -> SolverConfig:
        cfg = self.settings.solver
        return SolverConfig(
            max_edges=cfg.max_edges,
            node_budget=args.budget or cfg.node_budget,
            time_budget=args.time_budget or cfg.time_budget,
            symmetry_breaking=cfg.symmetry_breaking,
        )

    def cmd_exact(self, args) -> int:
        """Exact strong chromatic index with a certificate coloring."""
        try:
            g = parse_graph(_read_input(args.input), args.format)
            result = exact_chi_s(g, self._solver_config(args), self.store if args.store else None, args.kmax)
        except (GraphParseError, GraphArgumentError) as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_PARSE

        if result.chi_s is None:
            print(f"Indeterminate (lower bound {result.lower_bound}, attempts {result.attempts})")
            return EXIT_OK
        print(f"chi_s = {result.chi_s}")
        for e, (u, v) in enumerate(g.edges):
            print(f"{u} {v} {result.coloring[e]}")
        return EXIT_OK

    # ------------------------------------------------------------------
    # batch / bench / survey / enumerate / report
    # ------------------------------------------------------------------

    def cmd_batch(self, args) -> int:
        """Color a graph6 stream and print the RunReport summary."""
        lines = _read_input(args.input).splitlines()
        batch = self.config_manager.get_batch_settings()
        parallel = args.parallel or batch.get('parallel', 1)
        runner = BatchRunner(self.settings, parallel, progress=batch.get('progress', True) and not args.json)
        report = runner.run(lines, label=args.label or '')

        if args.store:
            for record in report.records:
                self.store.insert_run_record(record.to_dict(), report.label)
        if args.html:
            path = ReportGenerator(self.config_manager.get_paths().get('report_dir')).generate_run_report(
                report.to_dict())
            if path:
                print(f"report: {path}", file=sys.stderr)

        if args.json:
            print(json.dumps(report.to_dict()))
        else:
            print(json.dumps(report.summary()))
            for r in report.failures:
                print(f"{r.input_id}: {r.error or 'verification failed'}")
        return EXIT_OK if report.ok else EXIT_VIOLATIONS

    def cmd_bench(self, args) -> int:
        """Timing table, one JSON row per size."""
        defaults = self.config_manager.get_bench_settings()
        try:
            sizes = [int(s) for s in args.sizes.split(',') if s.strip()]
            rows = bench(args.family, sizes, args.repeats or defaults.get('repeats', 3),
                         args.seed if args.seed is not None else defaults.get('seed', 7), self.settings)
        except (ValueError, GraphArgumentError) as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_PARSE
        for row in rows:
            print(json.dumps(row))
        if args.html:
            ReportGenerator(self.config_manager.get_paths().get('report_dir')).generate_table_report(
                f"Bench {args.family}", rows)
        return EXIT_OK

    def cmd_survey(self, args) -> int:
        """Exact-solver surveys over small enumerated graphs or expanded prisms."""
        cfg = self._solver_config(args)
        try:
            if args.kind == 'extremal':
                rows = [{'graph6': write_graph6(g)} for g in survey_extremal(args.n, args.chi, cfg)]
            elif args.kind == 'cubic':
                rows = [{'graph6': code, 'chi_s': chi} for code, chi in survey_cubic_range(args.n, cfg)]
            elif args.kind == 'chi6':
                rows = [{'graph6': code} for code in survey_chi_six(args.n, cfg)]
            else:
                ks = [int(k) for k in args.ks.split(',')]
                rows = question1_table(ks, cfg)
        except (ValueError, GraphArgumentError) as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_PARSE
        for row in rows:
            print(json.dumps(row))
        if args.html:
            ReportGenerator(self.config_manager.get_paths().get('report_dir')).generate_table_report(
                f"Survey {args.kind}", rows)
        return EXIT_OK

    def cmd_enumerate(self, args) -> int:
        """graph6 lines of connected subcubic graphs on N vertices."""
        from modules.corpus import enumerate_claw_free, enumerate_connected_subcubic

        try:
            graphs = enumerate_claw_free(args.n) if args.claw_free else enumerate_connected_subcubic(args.n)
            for g in graphs:
                print(write_graph6(g))
        except GraphArgumentError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_PARSE
        return EXIT_OK

    def cmd_report(self, args) -> int:
        """Render stored batch records of one run label."""
        records = self.store.get_run_records(args.run_label)
        if not records:
            print(f"no records for run {args.run_label!r}", file=sys.stderr)
            return EXIT_PARSE
        run_data = {
            'label': args.run_label,
            'summary': self.store.summarize_runs(args.run_label),
            'records': records,
        }
        path = ReportGenerator(self.config_manager.get_paths().get('report_dir')).generate_run_report(
            run_data, format='pdf' if args.pdf else 'html')
        if path is None:
            return EXIT_INTERNAL
        print(path)
        return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='strongcolor', description=__doc__.strip().splitlines()[1])
    parser.add_argument('--config-dir', default=None, help='configuration directory (default ~/.strongcolor)')
    sub = parser.add_subparsers(dest='command', required=True)

    def graph_input(p, name='input'):
        p.add_argument(name, nargs='?' if name == 'input' else None, default='-', help="file, or '-' for stdin")
        p.add_argument('--format', choices=('edgelist', 'graph6'), default='edgelist')

    def budgets(p):
        p.add_argument('--budget', type=int, default=None, help='node budget per k')
        p.add_argument('--time-budget', type=float, default=None, help='seconds per k')

    p = sub.add_parser('color', help='strong-color one graph')
    graph_input(p)
    p.add_argument('--json', action='store_true')
    p.add_argument('--trace', action='store_true')

    p = sub.add_parser('verify', help='check a coloring')
    graph_input(p, 'graph')
    p.add_argument('coloring')
    p.add_argument('--palette', type=int, default=9, choices=range(1, 10))

    p = sub.add_parser('exact', help='exact strong chromatic index')
    graph_input(p)
    p.add_argument('--kmax', type=int, default=9)
    p.add_argument('--store', action='store_true', help='consult and update the result store')
    budgets(p)

    p = sub.add_parser('batch', help='color a graph6 stream')
    p.add_argument('input', nargs='?', default='-')
    p.add_argument('--parallel', type=int, default=None)
    p.add_argument('--label', default=None)
    p.add_argument('--store', action='store_true')
    p.add_argument('--html', action='store_true')
    p.add_argument('--json', action='store_true')

    p = sub.add_parser('bench', help='timing table')
    p.add_argument('--family', choices=BENCH_FAMILIES, default='expanded-prism')
    p.add_argument('--sizes', default='1000,2000,4000,8000')
    p.add_argument('--repeats', type=int, default=None)
    p.add_argument('--seed', type=int, default=None)
    p.add_argument('--html', action='store_true')

    p = sub.add_parser('survey', help='exact-solver surveys')
    p.add_argument('kind', choices=('extremal', 'cubic', 'chi6', 'question1'))
    p.add_argument('--n', type=int, default=5)
    p.add_argument('--chi', type=int, default=7)
    p.add_argument('--ks', default='3,4,5')
    p.add_argument('--html', action='store_true')
    budgets(p)

    p = sub.add_parser('enumerate', help='graph6 enumeration')
    p.add_argument('n', type=int)
    p.add_argument('--claw-free', action='store_true')

    p = sub.add_parser('report', help='render a stored batch run')
    p.add_argument('run_label')
    p.add_argument('--pdf', action='store_true')
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    args = build_parser().parse_args(argv)
    app = StrongColorApp(args.config_dir)
    try:
        return getattr(app, f"cmd_{args.command}")(args)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    finally:
        app.close()


if __name__ == '__main__':
    sys.exit(main())

"""Batch coloring of graph6 streams and the timing harness."""

import pytest

from modules.batch_runner import BatchRunner, GraphRecord, RunReport, bench, bench_graph, color_graph
from modules.corpus import complete_graph, get
from modules.errors import GraphArgumentError
from modules.graph_io import write_graph6


@pytest.fixture
def runner():
    return BatchRunner(progress=False)


def test_records_in_input_order(runner):
    lines = [write_graph6(get("prism3")), "", write_graph6(complete_graph(4)), write_graph6(get("c7"))]
    report = runner.run(lines, label="demo")
    assert [r.input_id for r in report.records] == ["line1", "line3", "line4"]
    prism, k4, c7 = report.records
    assert prism.exceptional and prism.colors_used == 9 and prism.verified
    assert k4.colors_used == 6 and k4.lower_bound == 6
    assert c7.verified and c7.colors_used <= 7
    assert report.ok
    assert report.summary()["total"] == 3
    assert report.summary()["exceptional"] == 1


def test_parse_and_class_errors_become_records(runner):
    lines = ["D\x20w", write_graph6(get("claw")), write_graph6(get("paw"))]
    report = runner.run(lines)
    bad, claw, paw = report.records
    assert bad.error.startswith("GraphParseError")
    assert claw.error.startswith("NotClawFreeError")
    assert paw.verified
    assert not report.ok
    assert [r.input_id for r in report.failures] == ["line1", "line2"]
    assert report.summary()["errors"] == 2


def test_empty_stream(runner):
    report = runner.run([])
    assert report.records == []
    assert report.ok
    assert report.summary()["max_colors"] is None


def test_parallel_matches_sequential():
    lines = [write_graph6(get(name)) for name in ("k4", "h1", "c6", "diamond")]
    sequential = BatchRunner(progress=False).run(lines)
    parallel = BatchRunner(parallel=2, progress=False).run(lines)
    assert [r.colors_used for r in parallel.records] == [r.colors_used for r in sequential.records]
    assert [r.input_id for r in parallel.records] == [r.input_id for r in sequential.records]


def test_run_graphs(runner):
    report = runner.run_graphs([("k4", complete_graph(4)), ("h3", get("h3"))], label="named")
    assert [r.input_id for r in report.records] == ["k4", "h3"]
    assert report.ok
    assert report.to_dict()["label"] == "named"


def test_color_graph_record_fields():
    record = color_graph("h1", get("h1"))
    data = record.to_dict()
    assert data["verified"] is True
    assert data["trace"][0]["tag"] == "HasDegree2"
    assert data["n"] == 5 and data["m"] == 7


def test_report_summary_counts():
    report = RunReport([GraphRecord("a", colors_used=5, verified=True),
                        GraphRecord("b", error="boom")])
    summary = report.summary()
    assert summary["verified"] == 1
    assert summary["errors"] == 1
    assert summary["max_colors"] == 5


class TestBench:
    def test_families(self):
        assert bench_graph("expanded-prism", 45).m == 45
        g = bench_graph("random", 60, seed=3)
        assert g.n <= 40
        g = bench_graph("random-cubic", 90, seed=3)
        assert g.n == 60 and g.m == 90

    def test_unknown_family(self):
        with pytest.raises(GraphArgumentError):
            bench_graph("hypercube", 10)

    def test_rows(self):
        rows = bench("expanded-prism", [54, 108], repeats=1)
        assert [r["m"] for r in rows] == [54, 108]
        assert rows[0]["doubling_ratio"] is None
        assert rows[1]["doubling_ratio"] is not None
        assert all(r["median_seconds"] >= 0 for r in rows)

    @pytest.mark.slow
    def test_doubling_ratio_is_near_linear(self):
        rows = bench("expanded-prism", [1800, 3600, 7200], repeats=3)
        ratios = [r["doubling_ratio"] for r in rows[1:]]
        assert all(ratio is not None and ratio <= 2.5 for ratio in ratios), rows

    def test_sizes_must_ascend(self):
        with pytest.raises(GraphArgumentError):
            bench("random", [200, 100])

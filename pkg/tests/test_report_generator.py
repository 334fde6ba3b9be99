"""HTML and PDF report rendering."""

from pathlib import Path

import pytest

from modules.batch_runner import BatchRunner
from modules.corpus import complete_graph, get
from modules.graph_io import write_graph6
from modules.report_generator import ReportGenerator


@pytest.fixture
def generator(tmp_path):
    return ReportGenerator(str(tmp_path / "reports"))


def test_run_report_html(generator):
    lines = [write_graph6(complete_graph(4)), write_graph6(get("claw"))]
    report = BatchRunner(progress=False).run(lines, label="smoke<1>")
    path = generator.generate_run_report(report.to_dict())
    text = Path(path).read_text(encoding="utf-8")
    assert path.endswith(".html")
    assert "smoke&lt;1&gt;" in text
    assert "NotClawFreeError" in text
    assert 'class="failed"' in text


def test_run_report_without_records(generator):
    path = generator.generate_run_report({"label": "empty", "summary": {}, "records": []})
    assert "No records" in Path(path).read_text(encoding="utf-8")


def test_table_report(generator):
    rows = [{"size": 1000, "m": 999, "median_seconds": 0.5, "doubling_ratio": None},
            {"size": 2000, "m": 1998, "median_seconds": 1.1, "doubling_ratio": 2.2}]
    path = generator.generate_table_report("Bench expanded-prism", rows)
    text = Path(path).read_text(encoding="utf-8")
    assert Path(path).name.startswith("bench_expanded_prism_")
    assert "<th>median_seconds</th>" in text
    assert "2.2" in text


def test_table_report_nested_values(generator):
    path = generator.generate_table_report("Survey", [{"k": 3, "certificate": [1, 2]}])
    assert "[1, 2]" in Path(path).read_text(encoding="utf-8")


def test_pdf_report(generator):
    try:
        import weasyprint  # noqa: F401
    except (ImportError, OSError):
        pytest.skip("WeasyPrint unavailable")
    path = generator.generate_run_report({"label": "pdf", "summary": {"total": 0}, "records": []}, format="pdf")
    assert path is not None and path.endswith(".pdf")
    assert Path(path).stat().st_size > 0

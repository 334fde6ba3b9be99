"""SQLite store of exact results and batch records."""

from modules.result_store import ResultStore


def _record(input_id, colors, verified=True, error=None, exceptional=False):
    return {
        "input_id": input_id, "n": 4, "m": 6, "colors_used": colors, "exceptional": exceptional,
        "verified": verified, "trace": [{"tag": "K4", "depth": 0}], "seconds": 0.25, "error": error,
    }


def test_exact_result_round_trip(store):
    assert store.get_exact_result("C~") is None
    assert store.save_exact_result("C~", 4, 6, 6, "Colorable", nodes=12, seconds=0.01,
                                   certificate=[1, 2, 3, 4, 5, 6])
    row = store.get_exact_result("C~")
    assert row["chi_s"] == 6
    assert row["certificate"] == [1, 2, 3, 4, 5, 6]
    assert row["n"] == 4 and row["m"] == 6


def test_exact_result_replaced(store):
    store.save_exact_result("Bw", 3, 3, None, "Indeterminate")
    store.save_exact_result("Bw", 3, 3, 3, "Colorable", certificate=[1, 2, 3])
    assert store.get_exact_result("Bw")["chi_s"] == 3


def test_run_records_by_label(store):
    store.insert_run_record(_record("line1", 6), "a")
    store.insert_run_record(_record("line2", 7), "a")
    store.insert_run_record(_record("line1", None, verified=False, error="GraphParseError: x"), "b")

    records = store.get_run_records("a")
    assert [r["input_id"] for r in records] == ["line1", "line2"]
    assert records[0]["verified"] is True
    assert records[0]["trace"] == [{"tag": "K4", "depth": 0}]
    assert len(store.get_run_records()) == 3


def test_summarize_runs(store):
    store.insert_run_record(_record("line1", 6), "a")
    store.insert_run_record(_record("line2", 9, exceptional=True), "a")
    store.insert_run_record(_record("line3", None, verified=False, error="boom"), "a")
    summary = store.summarize_runs("a")
    assert summary["total"] == 3
    assert summary["verified"] == 2
    assert summary["exceptional"] == 1
    assert summary["errors"] == 1
    assert summary["max_colors"] == 9


def test_persists_across_connections(tmp_path):
    path = str(tmp_path / "nested" / "results.db")
    first = ResultStore(path)
    first.save_exact_result("Bw", 3, 3, 3, "Colorable")
    first.close()
    second = ResultStore(path)
    assert second.get_exact_result("Bw")["chi_s"] == 3
    second.close()


def test_in_memory_store():
    store = ResultStore(":memory:")
    assert store.insert_run_record(_record("x", 3), "mem")
    assert store.summarize_runs("mem")["total"] == 1
    store.close()

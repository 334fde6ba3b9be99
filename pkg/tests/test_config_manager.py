"""Configuration defaults, persistence and environment overrides."""

import json

from modules.config_manager import ConfigManager


def test_defaults(config_manager, config_dir):
    cfg = config_manager.get_solver_config()
    assert cfg.max_edges == 40
    assert cfg.node_budget == 5_000_000
    assert config_manager.get_engine_settings()["repair_radius"] == 2
    assert config_manager.get_paths()["store_path"] == str(config_dir / "results.db")
    assert config_manager.validate_solver_settings()


def test_update_setting_persists(config_manager, config_dir):
    assert config_manager.update_setting("solver", "node_budget", 1000)
    stored = json.loads((config_dir / "config.json").read_text(encoding="utf-8"))
    assert stored["solver"]["node_budget"] == 1000
    assert ConfigManager(str(config_dir)).get_solver_config().node_budget == 1000


def test_partial_file_merges_over_defaults(config_dir):
    config_dir.mkdir(parents=True)
    (config_dir / "config.json").write_text(json.dumps({"bench": {"repeats": 9}}), encoding="utf-8")
    manager = ConfigManager(str(config_dir))
    assert manager.get_bench_settings() == {"repeats": 9, "seed": 7}


def test_corrupt_file_falls_back_to_defaults(config_dir):
    config_dir.mkdir(parents=True)
    (config_dir / "config.json").write_text("{not json", encoding="utf-8")
    assert ConfigManager(str(config_dir)).get_batch_settings()["parallel"] == 1


def test_environment_overrides(config_manager, monkeypatch):
    monkeypatch.setenv("STRONGCOLOR_NODE_BUDGET", "77")
    monkeypatch.setenv("STRONGCOLOR_PARALLEL", "4")
    monkeypatch.setenv("STRONGCOLOR_TIME_BUDGET", "soon")
    assert config_manager.get_solver_config().node_budget == 77
    assert config_manager.get_batch_settings()["parallel"] == 4
    assert config_manager.get_solver_config().time_budget == 30.0


def test_invalid_budget_detected(config_manager):
    config_manager.update_setting("solver", "time_budget", 0)
    assert not config_manager.validate_solver_settings()

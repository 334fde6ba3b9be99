"""Shared fixtures: catalog graphs, an isolated config directory and result store."""

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from modules import logger  # noqa: E402
from modules.config_manager import ConfigManager  # noqa: E402
from modules.corpus import catalog, get  # noqa: E402
from modules.graph_core import Graph  # noqa: E402
from modules.lemma_engine import StrongColorEngine  # noqa: E402
from modules.result_store import ResultStore  # noqa: E402


@pytest.fixture(autouse=True, scope="session")
def _quiet_logs(tmp_path_factory):
    logger.configure(str(tmp_path_factory.mktemp("logs")), quiet=True)


@pytest.fixture
def config_dir(tmp_path, monkeypatch):
    for name in ("STRONGCOLOR_NODE_BUDGET", "STRONGCOLOR_TIME_BUDGET", "STRONGCOLOR_PARALLEL",
                 "STRONGCOLOR_HOME"):
        monkeypatch.delenv(name, raising=False)
    return tmp_path / "config"


@pytest.fixture
def config_manager(config_dir):
    return ConfigManager(str(config_dir))


@pytest.fixture
def store(tmp_path):
    s = ResultStore(str(tmp_path / "results.db"))
    yield s
    s.close()


@pytest.fixture
def engine():
    return StrongColorEngine()


@pytest.fixture
def named():
    """Catalog lookup by name."""
    return get


@pytest.fixture
def claw_free_catalog():
    """Every catalog graph inside the claw-free subcubic class."""
    skip = {"claw", "petersen"}
    return {name: entry.graph for name, entry in catalog().items() if name not in skip}


def _diamond_ring(k: int) -> Graph:
    """k diamonds (K4 minus an edge) whose tips are joined in a ring; cubic, claw-free, 2-connected."""
    edges = []
    for i in range(k):
        x, a, b, y = 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3
        edges += [(x, a), (x, b), (a, b), (a, y), (b, y)]
        edges.append((y, 4 * ((i + 1) % k)))
    return Graph(4 * k, edges)


def _square_ring(k: int) -> Graph:
    """
    k induced 4-cycles v1v2v3v4, each with triangles on v1v2 and v3v4; the
    two triangle apexes of consecutive gadgets are joined in a ring.
    """
    edges = []
    for i in range(k):
        v1, v2, v3, v4, a, b = range(6 * i, 6 * i + 6)
        edges += [(v1, v2), (v2, v3), (v3, v4), (v4, v1), (a, v1), (a, v2), (b, v3), (b, v4)]
        edges.append((b, 6 * ((i + 1) % k) + 4))
    return Graph(6 * k, edges)


@pytest.fixture
def diamond_ring():
    return _diamond_ring


@pytest.fixture
def square_ring():
    return _square_ring

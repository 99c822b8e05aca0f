"""Shared fixtures: small hand-checkable graphs and seeded generators."""
import numpy as np
import pytest

from netblend.core.config import get_settings
from netblend.models.graph import Graph
from netblend.models.mixture import MixtureConfig
from netblend.utils.logging import setup_logging


@pytest.fixture(scope="session", autouse=True)
def quiet_logging():
    """Route structlog through stderr at WARNING, as the CLI would configure it."""
    setup_logging("WARNING", "console")


@pytest.fixture(autouse=True)
def testing_environment(monkeypatch):
    """Run every test with testing settings and a fresh settings cache."""
    monkeypatch.setenv("NETBLEND_ENVIRONMENT", "testing")
    monkeypatch.setenv("NETBLEND_LOG_LEVEL", "WARNING")
    monkeypatch.delenv("NETBLEND_METRICS_FILE", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


@pytest.fixture
def triangle() -> Graph:
    return Graph.complete(3)


@pytest.fixture
def path3() -> Graph:
    return Graph.path(3)


@pytest.fixture
def path4() -> Graph:
    return Graph.path(4)


@pytest.fixture
def star3() -> Graph:
    return Graph.star(3)


@pytest.fixture
def k4() -> Graph:
    return Graph.complete(4)


@pytest.fixture
def k4_minus_edge() -> Graph:
    g = Graph.complete(4)
    g.remove_edge(0, 1)
    return g


@pytest.fixture
def two_triangles() -> Graph:
    """Two disjoint triangles {0,1,2} and {3,4,5}."""
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


@pytest.fixture
def mixed_config() -> MixtureConfig:
    """A mixture that uses all four processes."""
    return MixtureConfig(
        n=10,
        p_pa=0.3,
        p_tra=0.3,
        p_ma=0.2,
        p_adm=0.2,
        m=2,
        k=4,
        p_rewiring=0.1,
        p_copying=0.5,
        n_adm=20,
        target_assortativity=-0.1,
    )

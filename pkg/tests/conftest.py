"""
Test configuration and fixtures.
"""

import os
from itertools import combinations

import pytest

os.environ.setdefault("LOG_LEVEL", "WARNING")

P4_TEXT = "4 3\n0 1\n1 2\n2 3\n"
C4_TEXT = "4 4\n0 1\n1 2\n2 3\n3 0\n"
C5_TEXT = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n"


@pytest.fixture(autouse=True)
def fresh_config():
    """Every test starts from configuration read from the environment."""
    from app.infrastructure.config import reset_config

    reset_config()
    yield
    reset_config()


@pytest.fixture(scope="session", autouse=True)
def quiet_logging():
    """Route structlog through stdlib logging at WARNING for the whole session."""
    from app.infrastructure.config import LoggingConfig
    from app.infrastructure.logging import setup_logging

    setup_logging(LoggingConfig(level="WARNING"))


@pytest.fixture
def four_sun():
    """K4 on 0..3 plus vertices 4..7, vertex 4 + i adjacent to i and i + 1 (mod 4).

    Chordal and S_{1,2,3}-free, its square contains an induced C4 on 4..7, and
    it has no efficient dominating set.
    """
    from app.domain.value_objects.graph import Graph

    edges = list(combinations(range(4), 2))
    edges += [(4 + i, i) for i in range(4)] + [(4 + i, (i + 1) % 4) for i in range(4)]
    return Graph.from_edge_list(8, edges)


@pytest.fixture
def graph_repository():
    """In-memory edge-list repository preloaded with a few small graphs."""
    from app.infrastructure.repositories.memory_repositories import InMemoryGraphRepository

    return InMemoryGraphRepository({"p4": P4_TEXT, "c4": C4_TEXT, "c5": C5_TEXT})


@pytest.fixture
def x3c_repository():
    from app.infrastructure.repositories.memory_repositories import InMemoryX3cRepository

    return InMemoryX3cRepository({"single": "3 1\n0 1 2\n"})


@pytest.fixture
def engines():
    """Fresh engine set keyed by engine name."""
    from app.infrastructure.adapters import build_engines

    return build_engines()


@pytest.fixture
def write_file(tmp_path):
    """Write text to a file under tmp_path and return its path as a string."""

    def _write(name: str, text: str) -> str:
        target = tmp_path / name
        target.write_text(text, encoding="utf-8")
        return str(target)

    return _write


@pytest.fixture
def to_networkx():
    """Convert a Graph to networkx for oracle comparisons."""
    nx = pytest.importorskip("networkx")

    def _convert(graph):
        result = nx.Graph()
        result.add_nodes_from(graph.vertices())
        result.add_edges_from(graph.edges())
        return result

    return _convert


@pytest.fixture
def enumerate_eds():
    """Minimum weight e.d.s. by checking every vertex subset; (set, weight) or None."""

    def _enumerate(graph, weights):
        from app.domain.services.eds import is_eds

        best = None
        for size in range(graph.n + 1):
            for subset in combinations(graph.vertices(), size):
                if any(not weights.is_finite(v) for v in subset):
                    continue
                if not is_eds(graph, subset):
                    continue
                total = weights.total(subset)
                if best is None or total < best[1]:
                    best = (frozenset(subset), total)
        return best

    return _enumerate

"""
Pytest configuration and fixtures for Community-Veil tests.
"""

import tempfile
from collections.abc import Generator
from pathlib import Path

import networkx as nx
import pytest

from community_veil.community.structure import CommunityStructure
from community_veil.config import Settings
from community_veil.experiments import run_pipeline
from community_veil.graph import Graph
from community_veil.models import ExperimentConfig, ExperimentReport
from community_veil.readers import serialize_edge_list


@pytest.fixture
def temp_dir() -> Generator[Path, None, None]:
    """Create a temporary directory for tests."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def test_settings(temp_dir: Path) -> Settings:
    """Create test settings with temporary directories."""
    return Settings(data_dir=temp_dir / "data", output_dir=temp_dir / "results")


@pytest.fixture
def two_triangles() -> Graph:
    """Triangles {0,1,2} and {3,4,5} joined by the bridge (2,3)."""
    edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)]
    return Graph([str(v) for v in range(6)], edges)


@pytest.fixture
def two_triangles_cs() -> CommunityStructure:
    """The planted partition of the two-triangle graph."""
    return CommunityStructure([0, 0, 0, 1, 1, 1])


@pytest.fixture
def k4() -> Graph:
    """Complete graph on four nodes."""
    return Graph(["a", "b", "c", "d"], [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def path3() -> Graph:
    """Path a - v - b."""
    return Graph(["a", "v", "b"], [(0, 1), (1, 2)])


@pytest.fixture
def planted_graph() -> Graph:
    """Four planted blocks of ten nodes with sparse links between them."""
    planted = nx.planted_partition_graph(4, 10, 0.6, 0.05, seed=7)
    return Graph([str(v) for v in range(planted.number_of_nodes())], planted.edges())


@pytest.fixture
def planted_file(temp_dir: Path, planted_graph: Graph) -> Path:
    """The planted graph written as an edge list."""
    path = temp_dir / "planted.txt"
    path.write_text(serialize_edge_list(planted_graph), encoding="utf-8")
    return path


@pytest.fixture
def triangles_file(temp_dir: Path, two_triangles: Graph) -> Path:
    """The two-triangle graph written as an edge list."""
    path = temp_dir / "triangles.txt"
    path.write_text(serialize_edge_list(two_triangles), encoding="utf-8")
    return path


@pytest.fixture
def planted_config(planted_file: Path) -> ExperimentConfig:
    """Default experiment on the planted graph."""
    return ExperimentConfig(graph_path=planted_file, seed=3)


@pytest.fixture
def planted_report(planted_config: ExperimentConfig) -> ExperimentReport:
    """One full pipeline run on the planted graph."""
    return run_pipeline(planted_config)

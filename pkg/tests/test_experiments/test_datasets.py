"""
Benchmark runs on the Dolphins, Adjnoun and Polbooks networks.

The GML files are looked up in tests/data/ and then in
COMMUNITY_VEIL_DATA_DIR; tests for a missing network are skipped.
"""

from pathlib import Path

import pytest

from community_veil.community import detect
from community_veil.config import settings
from community_veil.experiments import aggregate, sweep
from community_veil.models import ExperimentConfig, ExperimentReport, GraphState
from community_veil.readers import load_graph
from tests.oracles import check_logged_permanence

pytestmark = pytest.mark.datasets

DATA_DIR = Path(__file__).parent.parent / "data"
DATASETS = ["dolphins", "adjnoun", "polbooks"]
SEEDS = range(1, 11)


def _find(name: str) -> Path | None:
    for directory in (DATA_DIR, settings.data_dir):
        path = directory / f"{name}.gml"
        if path.exists():
            return path
    return None


def _dataset(name: str) -> Path:
    path = _find(name)
    if path is None:
        pytest.skip(f"{name}.gml not available")
    return path


def _run(name: str, detector: str = "louvain") -> list[ExperimentReport]:
    path = _dataset(name)
    result = sweep([ExperimentConfig(graph_path=path, detector=detector, seed=s) for s in SEEDS])
    assert result.failures == []
    return result.reports


def _count(reports: list[ExperimentReport], field: str, lower: GraphState, upper: GraphState) -> int:
    """Seeds where the metric at ``upper`` is at least its value at ``lower``."""
    return sum(
        1 for r in reports if getattr(r.row(upper), field) >= getattr(r.row(lower), field)
    )


@pytest.fixture(scope="module")
def reports() -> dict[str, list[ExperimentReport]]:
    """Ten Louvain seeds per available dataset."""
    return {name: _run(name) for name in DATASETS if _find(name) is not None}


def _reports_for(reports: dict[str, list[ExperimentReport]], name: str) -> list[ExperimentReport]:
    if name not in reports:
        pytest.skip(f"{name}.gml not available")
    return reports[name]


class TestBaseline:
    """Original-graph metrics over ten seeds."""

    def test_dolphins(self, reports: dict[str, list[ExperimentReport]]):
        """Mean modularity near 0.52 and coverage near 0.74."""
        table = aggregate(_reports_for(reports, "dolphins"))
        mean = table[table["row_type"] == "mean"].iloc[0]
        assert mean["M_G"] == pytest.approx(0.5202, abs=0.03)
        assert mean["C_G"] == pytest.approx(0.7447, abs=0.04)

    def test_adjnoun(self, reports: dict[str, list[ExperimentReport]]):
        """Mean modularity near 0.29."""
        table = aggregate(_reports_for(reports, "adjnoun"))
        mean = table[table["row_type"] == "mean"].iloc[0]
        assert mean["M_G"] == pytest.approx(0.2941, abs=0.03)


@pytest.mark.parametrize("name", DATASETS)
class TestDirections:
    """Deception lowers quality; recovery raises it again; in at least 8 of 10 seeds."""

    def test_deception_lowers_quality(self, reports: dict[str, list[ExperimentReport]], name: str):
        runs = _reports_for(reports, name)
        for field in ("modularity", "partition_quality"):
            kept = _count(runs, field, GraphState.ORIGINAL, GraphState.DECEIVED)
            dropped = len(runs) - kept
            assert dropped >= 8, f"{field} dropped in {dropped}/10 seeds"

    def test_recovery_raises_quality(self, reports: dict[str, list[ExperimentReport]], name: str):
        runs = _reports_for(reports, name)
        for field in ("modularity", "partition_quality"):
            recovered = _count(runs, field, GraphState.DECEIVED, GraphState.RECOVERED)
            assert recovered >= 8, f"{field} recovered in {recovered}/10 seeds"

    @pytest.mark.xfail(
        reason="recovery mostly adds new intra-target edges; 0/10 seeds on karate and Les Miserables",
        strict=False,
    )
    def test_recovered_graph_is_closer(self, reports: dict[str, list[ExperimentReport]], name: str):
        """Recovered graph is spectrally closer to the original than the deceived one."""
        runs = _reports_for(reports, name)
        closer = sum(
            1 for r in runs if r.distance("G,G''").value < r.distance("G,G'").value
        )
        assert closer >= 8

    def test_logged_permanence_is_monotone(
        self, reports: dict[str, list[ExperimentReport]], name: str
    ):
        """Every logged value matches a from-scratch recomputation."""
        g = load_graph(_dataset(name))
        for report in _reports_for(reports, name):
            check_logged_permanence(g, detect("louvain", g, report.config.seed), report)


def test_label_propagation_recovery_direction():
    """Recovery raises modularity back up under label propagation too."""
    runs = _run("dolphins", detector="labelprop")
    recovered = _count(runs, "modularity", GraphState.DECEIVED, GraphState.RECOVERED)
    assert recovered >= 8

"""
Full pipeline runs on the social networks that ship with networkx.

Zachary's karate club and the Les Miserables co-appearance network stand in
for the benchmark datasets whenever those are not available.
"""

from pathlib import Path

import networkx as nx
import pytest

from community_veil.community import detect
from community_veil.experiments import aggregate, sweep
from community_veil.models import ExperimentConfig, ExperimentReport
from community_veil.readers import load_graph
from tests.oracles import check_logged_permanence

SEEDS = range(1, 11)

NETWORKS = {
    "karate": (nx.karate_club_graph, 34, 78),
    "lesmis": (nx.les_miserables_graph, 77, 254),
}


@pytest.fixture(scope="module")
def network_files(tmp_path_factory: pytest.TempPathFactory) -> dict[str, Path]:
    """Each bundled network written as an integer edge list."""
    directory = tmp_path_factory.mktemp("networks")
    files = {}
    for name, (build, _, _) in NETWORKS.items():
        g = nx.convert_node_labels_to_integers(build())
        path = directory / f"{name}.txt"
        path.write_text("".join(f"{u} {v}\n" for u, v in g.edges()), encoding="utf-8")
        files[name] = path
    return files


@pytest.fixture(scope="module")
def reports(network_files: dict[str, Path]) -> dict[str, list[ExperimentReport]]:
    """Ten Louvain seeds per network."""
    runs = {}
    for name, path in network_files.items():
        result = sweep([ExperimentConfig(graph_path=path, seed=seed) for seed in SEEDS])
        assert result.failures == []
        runs[name] = result.reports
    return runs


@pytest.mark.parametrize("name", sorted(NETWORKS))
class TestBundledNetworks:
    """Pipeline invariants on real social networks."""

    def test_every_seed_reports(self, reports: dict[str, list[ExperimentReport]], name: str):
        """One report per seed with the network's size."""
        _, nodes, edges = NETWORKS[name]
        runs = reports[name]

        assert [r.config.seed for r in runs] == list(SEEDS)
        assert all((r.node_count, r.edge_count) == (nodes, edges) for r in runs)

    def test_edits_within_budget(self, reports: dict[str, list[ExperimentReport]], name: str):
        """Neither editor spends more than its budget."""
        for report in reports[name]:
            assert report.budget >= 1
            assert len(report.deception_log) <= report.budget
            assert len(report.recovery_log) <= report.recovery_budget

    def test_deception_lowers_permanence(
        self, reports: dict[str, list[ExperimentReport]], name: str
    ):
        """Any applied deception edit strictly lowers graph permanence."""
        for report in reports[name]:
            if report.deception_log:
                assert report.permanence["G'"] < report.permanence["G"]
            else:
                assert report.permanence["G'"] == report.permanence["G"]

    def test_recovery_raises_permanence(
        self, reports: dict[str, list[ExperimentReport]], name: str
    ):
        """Recovery never lowers graph permanence."""
        for report in reports[name]:
            assert report.permanence["G''"] >= report.permanence["G'"]

    def test_logged_permanence_is_monotone(
        self, network_files: dict[str, Path], reports: dict[str, list[ExperimentReport]], name: str
    ):
        """Every logged value matches a from-scratch recomputation."""
        g = load_graph(network_files[name])
        for report in reports[name]:
            check_logged_permanence(g, detect("louvain", g, report.config.seed), report)

    def test_edge_recovery_accounts_for_every_edit(
        self, reports: dict[str, list[ExperimentReport]], name: str
    ):
        """Each logged edit shows up exactly once in the edge-recovery counts."""
        for report in reports[name]:
            counts = report.edge_recovery
            assert counts.added_by_deception + counts.deleted_by_deception == len(
                report.deception_log
            )
            assert (
                counts.removed_by_recovery
                + counts.extra_deletions
                + counts.restored_by_recovery
                + counts.extra_additions
                == len(report.recovery_log)
            )

    def test_aggregate_has_one_mean_row(
        self, reports: dict[str, list[ExperimentReport]], name: str
    ):
        """Ten run rows collapse into one seed-averaged row."""
        table = aggregate(reports[name])

        assert (table["row_type"] == "run").sum() == 10
        means = table[table["row_type"] == "mean"]
        assert len(means) == 1
        assert means.iloc[0]["seeds"] == 10

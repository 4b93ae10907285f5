"""
Batch execution of experiment configs and seed-averaged aggregation.

Each config runs in isolation: a failing config is recorded as a
SweepFailure and the batch continues.
"""

import logging
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any

import pandas as pd

from community_veil.exceptions import CommunityVeilError
from community_veil.experiments.pipeline import run_pipeline
from community_veil.models import (
    ExperimentConfig,
    ExperimentReport,
    GraphState,
    SweepFailure,
    SweepResult,
)

logger = logging.getLogger(__name__)

GROUP_COLUMNS = ["dataset", "detector"]
KEY_COLUMNS = ["row_type", "dataset", "detector", "seed", "recovery_mode", "target", "seeds"]

STATE_SUFFIX = {
    GraphState.ORIGINAL: "G",
    GraphState.DECEIVED: "Gp",
    GraphState.RECOVERED: "Gpp",
}


def _run_one(config: ExperimentConfig) -> ExperimentReport | SweepFailure:
    try:
        return run_pipeline(config)
    except CommunityVeilError as e:
        error = e.to_dict()
    except (OSError, ValueError) as e:
        error = {"error": type(e).__name__, "message": str(e)}
    logger.warning(f"Sweep config {config.dataset} (seed {config.seed}) failed: {error['message']}")
    return SweepFailure(config=config, error=error)


def sweep(configs: Sequence[ExperimentConfig], jobs: int = 1) -> SweepResult:
    """
    Run every config, collecting reports and per-config failures.

    Args:
        configs: Non-empty list of experiment configs
        jobs: Worker processes; 1 runs in-process

    Returns:
        SweepResult with reports and failures in input order

    Raises:
        ValueError: empty config list or jobs < 1
    """
    if not configs:
        raise ValueError("sweep needs at least one config")
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")

    logger.info(f"Running sweep of {len(configs)} configs with {jobs} job(s)")
    if jobs == 1:
        outcomes = [_run_one(config) for config in configs]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_run_one, configs))

    result = SweepResult()
    for outcome in outcomes:
        if isinstance(outcome, SweepFailure):
            result.failures.append(outcome)
        else:
            result.reports.append(outcome)
    logger.info(f"Sweep finished: {len(result.reports)} reports, {len(result.failures)} failures")
    return result


def report_record(report: ExperimentReport) -> dict[str, Any]:
    """Flatten one report into a single aggregate row."""
    record: dict[str, Any] = {
        "row_type": "run",
        "dataset": report.dataset,
        "detector": report.config.detector,
        "seed": report.config.seed,
        "recovery_mode": report.config.recovery_mode.value,
        "target": report.config.target,
        "budget": report.budget,
        "deception_edits": len(report.deception_log),
        "recovery_edits": len(report.recovery_log),
    }
    for row in report.rows:
        suffix = STATE_SUFFIX[row.tag]
        record[f"M_{suffix}"] = row.modularity
        record[f"C_{suffix}"] = row.coverage
        record[f"PQ_{suffix}"] = row.partition_quality
        record[f"conductance_{suffix}"] = row.conductance
        record[f"k_{suffix}"] = row.community_count
        record[f"visibility_{suffix}"] = row.target_visibility

    distance_deceived = report.distance("G,G'").value
    distance_recovered = report.distance("G,G''").value
    record["dist_G_Gp"] = distance_deceived
    record["dist_G_Gpp"] = distance_recovered

    # 0/1 indicators; their group mean is the share of seeds in the expected direction
    record["M_dropped"] = int(record["M_Gp"] < record["M_G"])
    record["PQ_dropped"] = int(record["PQ_Gp"] < record["PQ_G"])
    record["M_recovered"] = int(record["M_Gpp"] >= record["M_Gp"])
    record["PQ_recovered"] = int(record["PQ_Gpp"] >= record["PQ_Gp"])
    record["closer_after_recovery"] = int(distance_recovered < distance_deceived)
    return record


def aggregate(reports: Sequence[ExperimentReport]) -> pd.DataFrame:
    """
    Per-report rows followed by per-(dataset, detector) mean and std rows.

    Std columns carry a ``_std`` suffix on the mean rows and are NaN for
    groups with a single seed.
    """
    if not reports:
        return pd.DataFrame(columns=KEY_COLUMNS)

    runs = pd.DataFrame([report_record(report) for report in reports])
    metric_columns = [c for c in runs.columns if c not in KEY_COLUMNS]

    grouped = runs.groupby(GROUP_COLUMNS, sort=True)[metric_columns]
    summary = grouped.mean().join(grouped.std().add_suffix("_std"))
    summary["seeds"] = grouped.size()
    summary = summary.reset_index()
    summary["row_type"] = "mean"

    table = pd.concat([runs, summary], ignore_index=True)
    ordered = [c for c in KEY_COLUMNS if c in table.columns]
    return table[ordered + [c for c in table.columns if c not in ordered]]


def write_aggregate(reports: Sequence[ExperimentReport], path: Path) -> Path:
    """Write the aggregate CSV to ``path``; parents are created as needed."""
    path.parent.mkdir(parents=True, exist_ok=True)
    aggregate(reports).to_csv(path, index=False)
    logger.info(f"Wrote aggregate of {len(reports)} reports to {path}")
    return path

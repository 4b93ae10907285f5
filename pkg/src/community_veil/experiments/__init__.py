"""Experiment orchestration: pipeline, sweeps and report formatting."""

from community_veil.experiments.formatter import ReportFormatter, parse_edit_log
from community_veil.experiments.pipeline import (
    compute_budget,
    evaluate_state,
    resolve_target,
    run_pipeline,
)
from community_veil.experiments.sweep import aggregate, report_record, sweep, write_aggregate

__all__ = [
    "ReportFormatter",
    "aggregate",
    "compute_budget",
    "evaluate_state",
    "parse_edit_log",
    "report_record",
    "resolve_target",
    "run_pipeline",
    "sweep",
    "write_aggregate",
]

"""
Report formatting utilities.

Provides JSON, aligned-text and CSV renderings of experiment reports, plus
the edit-log and spectral-distance JSON payloads written by the CLI.
"""

import json
from collections.abc import Iterable, Sequence
from typing import Any

import pandas as pd

from community_veil.exceptions import GraphFormatError, UnknownNodeError
from community_veil.graph import Graph
from community_veil.models import (
    EdgeAction,
    EdgeUpdate,
    EditLogEntry,
    ExperimentReport,
    GraphState,
    MetricsRow,
    SpectralDistance,
)
from community_veil.permanence.score import VertexPermanenceParts

METRIC_ROWS = [
    ("M", "modularity"),
    ("C", "coverage"),
    ("PQ", "partition_quality"),
]

PERMANENCE_COLUMNS = ["label", "I", "Emax", "deg", "Cin", "perm"]


def _dumps(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


class ReportFormatter:
    """
    Formats experiment artifacts for different outputs.

    Supports:
    - JSON (sorted keys, byte-stable for identical inputs)
    - Aligned text table
    - CSV metric table (rows M/C/PQ, columns G/G'/G'')
    """

    @staticmethod
    def to_json(report: ExperimentReport, include_timings: bool = False) -> str:
        """
        Format a report as JSON.

        Args:
            report: Report to format
            include_timings: Keep wall-clock timings in the payload

        Returns:
            JSON string with sorted keys
        """
        return _dumps(report.to_json_dict(include_timings=include_timings))

    @staticmethod
    def to_text(report: ExperimentReport) -> str:
        """Format a report as a human-readable aligned table."""
        rows = {row.tag: row for row in report.rows}
        tags = [tag for tag in GraphState if tag in rows]

        lines = [
            f"Dataset: {report.dataset} (n={report.node_count}, m={report.edge_count})",
            f"Detector: {report.config.detector}, seed {report.config.seed}, "
            f"recovery mode {report.config.recovery_mode.value}",
            f"Target community: {report.target_community} ({len(report.target_labels)} nodes)",
            f"Budget: {report.budget} deception / {report.recovery_budget} recovery; "
            f"applied {len(report.deception_log)} / {len(report.recovery_log)}",
            "",
        ]

        header = f"{'Metric':<12}" + "".join(f"{tag.value:>10}" for tag in tags)
        lines.extend([header, "-" * len(header)])
        table_rows = METRIC_ROWS + [
            ("Cond", "conductance"),
            ("Visibility", "target_visibility"),
            ("k", "community_count"),
        ]
        for name, field in table_rows:
            cells = []
            for tag in tags:
                value = getattr(rows[tag], field)
                cells.append(f"{value:>10}" if isinstance(value, int) else f"{value:>10.4f}")
            lines.append(f"{name:<12}" + "".join(cells))
        if report.permanence:
            cells = [f"{report.permanence.get(tag.value, float('nan')):>10.4f}" for tag in tags]
            lines.append(f"{'Permanence':<12}" + "".join(cells))

        if report.distances:
            lines.extend(["", "Spectral distance:"])
            for distance in report.distances:
                lines.append(f"  {distance.pair:<8} k={distance.k:<4} {distance.value:.6f}")

        recovery = report.edge_recovery
        lines.extend([
            "",
            f"Edges: deception added {recovery.added_by_deception} "
            f"(recovery removed {recovery.removed_by_recovery}), "
            f"deleted {recovery.deleted_by_deception} "
            f"(recovery restored {recovery.restored_by_recovery})",
        ])

        if report.timings:
            timings = ", ".join(f"{k} {v:.3f}s" for k, v in report.timings.items())
            lines.extend(["", f"Timings: {timings}"])

        return "\n".join(lines) + "\n"

    @staticmethod
    def to_csv(report: ExperimentReport) -> str:
        """Metric table with rows M/C/PQ and one column per graph state."""
        return ReportFormatter.metrics_csv(report.rows)

    @staticmethod
    def metrics_csv(rows: Sequence[MetricsRow]) -> str:
        """Rows M/C/PQ, columns in G/G'/G'' order for the states present."""
        by_tag = {row.tag: row for row in rows}
        tags = [tag for tag in GraphState if tag in by_tag]
        table = pd.DataFrame(
            [[getattr(by_tag[tag], field) for tag in tags] for _, field in METRIC_ROWS],
            index=pd.Index([name for name, _ in METRIC_ROWS], name="metric"),
            columns=[tag.value for tag in tags],
        )
        return table.to_csv(lineterminator="\n")

    @staticmethod
    def permanence_csv(g: Graph, parts: Sequence[VertexPermanenceParts], graph_value: float) -> str:
        """Per-vertex permanence terms followed by the graph aggregate."""
        table = pd.DataFrame(
            [p.as_row(g.label(v)) for v, p in enumerate(parts)], columns=PERMANENCE_COLUMNS
        )
        body = table.to_csv(index=False, lineterminator="\n")
        return body + f"# graph_permanence={graph_value!r}\n"

    @staticmethod
    def edit_log(entries: Iterable[EditLogEntry], gain: bool = False) -> list[dict[str, Any]]:
        """
        Edit log records ``{iter, action, u, v, p_loss}`` (``p_gain`` for recovery).

        ``u`` and ``v`` are node labels.
        """
        key = "p_gain" if gain else "p_loss"
        return [
            {
                "iter": entry.iteration,
                "action": entry.action.value,
                "u": entry.u_label,
                "v": entry.v_label,
                key: entry.graph_delta,
                "vertex_delta": entry.vertex_delta,
                "perm": entry.graph_permanence,
            }
            for entry in entries
        ]

    @staticmethod
    def edit_log_json(entries: Iterable[EditLogEntry], gain: bool = False) -> str:
        return _dumps(ReportFormatter.edit_log(entries, gain=gain))

    @staticmethod
    def simdist_json(distances: Iterable[SpectralDistance]) -> str:
        """Bar-chart data: one ``{pair, k, distance}`` record per graph pair."""
        return _dumps([
            {"pair": d.pair, "k": d.k, "distance": d.value} for d in distances
        ])

    @staticmethod
    def format(report: ExperimentReport, output_format: str = "json", include_timings: bool = False) -> str:
        """
        Format a report in the specified format.

        Args:
            report: Report to format
            output_format: One of 'json', 'text', 'csv'
            include_timings: JSON only; keep wall-clock timings

        Returns:
            Formatted string
        """
        if output_format == "json":
            return ReportFormatter.to_json(report, include_timings=include_timings)
        elif output_format == "text":
            return ReportFormatter.to_text(report)
        elif output_format == "csv":
            return ReportFormatter.to_csv(report)
        else:
            raise ValueError(f"Unsupported format: {output_format}")


def parse_edit_log(text: str, g: Graph) -> list[EdgeUpdate]:
    """
    Read an edit log written by ``edit_log_json`` back into updates on ``g``.

    Raises:
        GraphFormatError: not a JSON list of records with action/u/v
        UnknownNodeError: a label is not in ``g``
    """
    try:
        records = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphFormatError(f"edit log is not valid JSON: {e.msg}", line=e.lineno) from e
    if not isinstance(records, list):
        raise GraphFormatError("edit log must be a JSON list")

    updates = []
    for record in records:
        try:
            action = EdgeAction(record["action"])
            u, v = g.node_id(str(record["u"])), g.node_id(str(record["v"]))
            update = EdgeUpdate(action=action, u=u, v=v)
        except UnknownNodeError:
            raise
        except (KeyError, TypeError, ValueError) as e:
            raise GraphFormatError(f"malformed edit log record {record!r}") from e
        updates.append(update)
    return updates

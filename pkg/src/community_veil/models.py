"""
Data models for Community-Veil.

Defines the serializable structures used throughout the application for
edge updates, edit logs, evaluation metrics and experiment reports.
"""

from enum import Enum
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class GraphFormat(str, Enum):
    """Supported graph file formats."""

    EDGELIST = "edgelist"
    GML = "gml"


class EdgeAction(str, Enum):
    """Kinds of single-edge updates."""

    ADD = "add"
    DELETE = "delete"


class RecoveryMode(str, Enum):
    """Which partition the recovery step works against."""

    ORACLE = "oracle"  # partition detected on the original graph
    REDETECT = "redetect"  # partition re-detected on the deceived graph


class GraphState(str, Enum):
    """The three graph states an experiment reports on."""

    ORIGINAL = "G"
    DECEIVED = "G'"
    RECOVERED = "G''"


# ============================================================================
# Edge Update Models
# ============================================================================


class EdgeUpdate(BaseModel):
    """
    A single undirected edge addition or deletion.

    Endpoints are internal node ids; the update is validated against a
    concrete graph only when applied.
    """

    model_config = ConfigDict(frozen=True)

    action: EdgeAction = Field(..., description="Add or delete")
    u: int = Field(..., ge=0, description="First endpoint")
    v: int = Field(..., ge=0, description="Second endpoint")

    @model_validator(mode="after")
    def _no_self_loop(self) -> "EdgeUpdate":
        if self.u == self.v:
            raise ValueError(f"self-loop update on node {self.u}")
        return self

    @classmethod
    def add(cls, u: int, v: int) -> "EdgeUpdate":
        return cls(action=EdgeAction.ADD, u=u, v=v)

    @classmethod
    def delete(cls, u: int, v: int) -> "EdgeUpdate":
        return cls(action=EdgeAction.DELETE, u=u, v=v)

    def inverse(self) -> "EdgeUpdate":
        """The update that undoes this one."""
        action = EdgeAction.DELETE if self.action == EdgeAction.ADD else EdgeAction.ADD
        return EdgeUpdate(action=action, u=self.u, v=self.v)

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.u, self.v)


class EditLogEntry(BaseModel):
    """
    One applied update of a greedy deception or recovery run.

    ``graph_delta`` is the graph-level permanence loss for deception and the
    graph-level permanence gain for recovery; both are positive for every
    applied update.
    """

    iteration: int = Field(..., ge=1, description="1-based iteration index")
    update: EdgeUpdate
    u_label: str = Field(..., description="External label of u")
    v_label: str = Field(..., description="External label of v")
    vertex_delta: float = Field(..., description="Single-vertex score used for candidate choice")
    graph_delta: float = Field(..., description="Graph permanence loss or gain")
    graph_permanence: float = Field(..., description="Graph permanence after the update")

    @property
    def action(self) -> EdgeAction:
        return self.update.action


# ============================================================================
# Metric Models
# ============================================================================


class MetricsRow(BaseModel):
    """Partition-quality metrics of one graph state against its own partition."""

    tag: GraphState
    modularity: float = Field(..., ge=-0.5, le=1.0)
    coverage: float = Field(..., ge=0.0, le=1.0)
    partition_quality: float = Field(..., ge=0.0, le=1.0)
    conductance: float = Field(default=0.0, ge=0.0, le=1.0, description="Mean community conductance")
    community_count: int = Field(..., ge=1)
    target_visibility: float = Field(
        default=0.0, ge=0.0, le=1.0, description="Best Jaccard of the target against any community"
    )
    partition_source: str = Field(..., description="Provenance of the evaluated partition")


class SpectralDistance(BaseModel):
    """Top-k Laplacian eigenvalue distance between two graphs."""

    pair: str = Field(default="", description="Human-readable pair name, e.g. G,G'")
    value: float = Field(..., ge=0.0, description="Sum of squared eigenvalue differences")
    k: int = Field(..., ge=0, description="Number of compared eigenvalues")
    energy: float = Field(default=0.9, gt=0.0, le=1.0)
    k_first: int = Field(default=0, ge=0)
    k_second: int = Field(default=0, ge=0)


class EdgeRecovery(BaseModel):
    """How much of the deception edit set the recovery undid."""

    added_by_deception: int = 0
    removed_by_recovery: int = Field(default=0, description="Deception additions later deleted")
    deleted_by_deception: int = 0
    restored_by_recovery: int = Field(default=0, description="Deception deletions later re-added")
    extra_deletions: int = Field(default=0, description="Recovery deletions of original edges")
    extra_additions: int = Field(default=0, description="Recovery additions absent from G")
    jaccard_deceived: float = Field(default=1.0, description="Edge-set Jaccard of G' vs G")
    jaccard_recovered: float = Field(default=1.0, description="Edge-set Jaccard of G'' vs G")


# ============================================================================
# Experiment Models
# ============================================================================


class ExperimentConfig(BaseModel):
    """One detect -> deceive -> recover -> evaluate run."""

    graph_path: Path
    graph_format: GraphFormat | None = Field(default=None, description="None infers from suffix")
    detector: str = "louvain"
    seed: int = 1
    target: str = Field(default="largest", description="largest | index:K | nodes:a,b,c")
    budget_fraction: float = Field(default=0.3, gt=0.0, le=1.0)
    recovery_budget_fraction: float | None = Field(
        default=None, gt=0.0, le=1.0, description="None reuses the deception budget"
    )
    recovery_mode: RecoveryMode = RecoveryMode.ORACLE
    energy: float = Field(default=0.9, gt=0.0, le=1.0)
    full_recompute: bool = False

    @field_validator("detector")
    @classmethod
    def _known_detector(cls, value: str) -> str:
        from community_veil.community.detectors import DetectorRegistry

        if value not in DetectorRegistry.names():
            raise ValueError(f"unknown detector {value!r}; known: {DetectorRegistry.names()}")
        return value

    @property
    def dataset(self) -> str:
        return self.graph_path.stem


class ExperimentReport(BaseModel):
    """Everything one pipeline run produced: metrics, distances and edit logs."""

    config: ExperimentConfig
    dataset: str
    node_count: int
    edge_count: int
    target_community: int
    target_labels: list[str]
    budget: int
    recovery_budget: int
    rows: list[MetricsRow] = Field(default_factory=list)
    distances: list[SpectralDistance] = Field(default_factory=list)
    deception_log: list[EditLogEntry] = Field(default_factory=list)
    recovery_log: list[EditLogEntry] = Field(default_factory=list)
    permanence: dict[str, float] = Field(
        default_factory=dict, description="Graph permanence per state under the deception partition"
    )
    edge_recovery: EdgeRecovery = Field(default_factory=EdgeRecovery)
    timings: dict[str, float] = Field(default_factory=dict, description="Wall-clock seconds")

    def row(self, tag: GraphState) -> MetricsRow:
        for row in self.rows:
            if row.tag == tag:
                return row
        raise KeyError(tag.value)

    def distance(self, pair: str) -> SpectralDistance:
        for distance in self.distances:
            if distance.pair == pair:
                return distance
        raise KeyError(pair)

    def to_json_dict(self, include_timings: bool = False) -> dict[str, Any]:
        """Export as a JSON-serializable dict; timings only on request."""
        exclude = None if include_timings else {"timings"}
        return self.model_dump(mode="json", exclude=exclude)


class SweepFailure(BaseModel):
    """A sweep config that raised instead of producing a report."""

    config: ExperimentConfig
    error: dict[str, Any]


class SweepResult(BaseModel):
    """Reports and failures of a sweep, both in input order."""

    reports: list[ExperimentReport] = Field(default_factory=list)
    failures: list[SweepFailure] = Field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.reports) + len(self.failures)

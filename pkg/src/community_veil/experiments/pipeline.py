"""
Detect -> deceive -> recover -> evaluate experiment pipeline.

Every graph state (G, G', G'') is evaluated against a partition re-detected
on that same graph with the configured detector and seed; the partition used
for deception is never reused for evaluation.
"""

import logging
import time
from collections.abc import Collection
from decimal import ROUND_HALF_UP, Decimal

from community_veil.community.detectors import detect
from community_veil.community.structure import CommunityStructure, match_community
from community_veil.config import settings
from community_veil.editing.deception import neural
from community_veil.editing.recovery import r_neural
from community_veil.exceptions import (
    BudgetError,
    CommunityVeilError,
    TargetResolutionError,
)
from community_veil.graph import Graph
from community_veil.metrics.edges import edge_recovery
from community_veil.metrics.partition import (
    conductance,
    coverage,
    modularity,
    partition_quality,
    target_visibility,
)
from community_veil.metrics.spectral import spectral_distance
from community_veil.models import (
    ExperimentConfig,
    ExperimentReport,
    GraphState,
    MetricsRow,
    RecoveryMode,
)
from community_veil.permanence.score import graph_permanence
from community_veil.readers import load_graph

logger = logging.getLogger(__name__)


def compute_budget(target: Collection[int] | int, fraction: float) -> int:
    """
    Edit budget B = fraction * |target|, rounded half-up, at least 1.

    Raises:
        BudgetError: empty target or fraction outside (0, 1]
    """
    size = target if isinstance(target, int) else len(target)
    if size < 1:
        raise BudgetError("target community is empty")
    if not 0.0 < fraction <= 1.0:
        raise BudgetError(f"budget fraction must be in (0, 1], got {fraction}", fraction=fraction)
    exact = Decimal(str(fraction)) * size
    return max(1, int(exact.quantize(Decimal(1), rounding=ROUND_HALF_UP)))


def resolve_target(cs: CommunityStructure, selector: str, g: Graph) -> int:
    """
    Resolve a target selector to a community index of ``cs``.

    Selectors: ``largest`` (ties to the smallest index), ``index:K``, or
    ``nodes:a,b,c`` (labels, mapped to the best-matching community).

    Raises:
        TargetResolutionError: malformed selector, index out of range or
            unknown labels
    """
    kind, _, value = selector.partition(":")
    if kind == "largest" and not value:
        return cs.largest()

    if kind == "index":
        try:
            index = int(value)
        except ValueError:
            raise TargetResolutionError(f"invalid community index {value!r}") from None
        if not 0 <= index < cs.k:
            raise TargetResolutionError(
                f"community index {index} out of range 0..{cs.k - 1}", index=index
            )
        return index

    if kind == "nodes":
        labels = [label for label in value.split(",") if label]
        if not labels:
            raise TargetResolutionError("nodes selector lists no labels")
        try:
            nodes = {g.node_id(label) for label in labels}
        except CommunityVeilError as e:
            raise TargetResolutionError(str(e), selector=selector) from e
        return match_community(cs, nodes)

    raise TargetResolutionError(f"unknown target selector {selector!r}", selector=selector)


def evaluate_state(
    tag: GraphState,
    g: Graph,
    detector: str,
    seed: int,
    target: Collection[int],
) -> MetricsRow:
    """Metrics of ``g`` against a partition freshly detected on ``g``."""
    cs = detect(detector, g, seed)
    return MetricsRow(
        tag=tag,
        modularity=modularity(g, cs),
        coverage=coverage(g, cs),
        partition_quality=partition_quality(g, cs),
        conductance=conductance(g, cs),
        community_count=cs.k,
        target_visibility=target_visibility(cs, target),
        partition_source=f"{detector}(seed={seed}) on {tag.value}",
    )


def run_pipeline(config: ExperimentConfig) -> ExperimentReport:
    """
    Run one full experiment.

    Deterministic for a fixed config: the seed only drives detector visiting
    orders; deception and recovery are deterministic given their inputs.

    Raises:
        GraphFormatError, FileNotFoundError: dataset missing or unparseable
        DetectorError: unknown detector
        TargetResolutionError: target selector cannot be resolved
    """
    timings: dict[str, float] = {}
    started = time.perf_counter()

    def lap(name: str, since: float) -> float:
        now = time.perf_counter()
        timings[name] = now - since
        return now

    path = settings.resolve_dataset(config.graph_path)
    g = load_graph(path, config.graph_format)
    cs = detect(config.detector, g, config.seed)
    community = resolve_target(cs, config.target, g)
    target = cs.communities[community]
    budget = compute_budget(target, config.budget_fraction)
    recovery_budget = (
        compute_budget(target, config.recovery_budget_fraction)
        if config.recovery_budget_fraction is not None
        else budget
    )
    logger.info(
        f"{config.dataset}: target community {community} ({len(target)} nodes), "
        f"budget {budget}, recovery budget {recovery_budget}"
    )
    mark = lap("detect", started)

    deception = neural(g, cs, community, budget, full_recompute=config.full_recompute)
    deceived = deception.output_graph
    mark = lap("deceive", mark)

    if config.recovery_mode == RecoveryMode.ORACLE:
        recovery_cs = cs
    else:
        recovery_cs = detect(config.detector, deceived, config.seed)
    recovery = r_neural(
        deceived, recovery_cs, target, recovery_budget, full_recompute=config.full_recompute
    )
    recovered = recovery.output_graph
    mark = lap("recover", mark)

    states = [
        (GraphState.ORIGINAL, g),
        (GraphState.DECEIVED, deceived),
        (GraphState.RECOVERED, recovered),
    ]
    rows = [evaluate_state(tag, state, config.detector, config.seed, target) for tag, state in states]
    mark = lap("evaluate", mark)

    distances = [
        spectral_distance(g, deceived, config.energy, pair="G,G'"),
        spectral_distance(g, recovered, config.energy, pair="G,G''"),
    ]
    lap("spectral", mark)
    timings["total"] = time.perf_counter() - started

    return ExperimentReport(
        config=config,
        dataset=config.dataset,
        node_count=g.node_count,
        edge_count=g.edge_count,
        target_community=community,
        target_labels=[g.label(v) for v in sorted(target)],
        budget=budget,
        recovery_budget=recovery_budget,
        rows=rows,
        distances=distances,
        deception_log=deception.log,
        recovery_log=recovery.log,
        permanence={
            tag.value: graph_permanence(state, cs) for tag, state in states
        },
        edge_recovery=edge_recovery(g, deceived, recovered),
        timings=timings,
    )

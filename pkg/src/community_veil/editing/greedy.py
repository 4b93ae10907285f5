"""
Greedy permanence-driven edge editing shared by deception and recovery.

Each iteration picks the best candidate of two families by a single-vertex
permanence difference, scores both picks by their graph-level permanence
change, and applies the first family's pick if its change is at least the
second's and positive, else the second's if positive, else stops.
"""

import logging
from abc import ABC, abstractmethod
from collections.abc import Collection, Iterable, Iterator
from dataclasses import dataclass, field
from typing import ClassVar

from community_veil.community.structure import CommunityStructure
from community_veil.config import settings
from community_veil.editing.candidates import Candidate, ScoredCandidate
from community_veil.exceptions import BudgetError, PartitionError
from community_veil.graph import Graph
from community_veil.models import EdgeUpdate, EditLogEntry
from community_veil.permanence.cache import PermanenceCache, rescore_after_update
from community_veil.permanence.score import graph_permanence, vertex_permanence_after

logger = logging.getLogger(__name__)


@dataclass
class EditRun:
    """Result of a greedy editing run."""

    input_graph: Graph
    partition: CommunityStructure
    community_index: int
    target: frozenset[int]
    budget: int
    output_graph: Graph
    initial_permanence: float
    final_permanence: float
    log: list[EditLogEntry] = field(default_factory=list)

    @property
    def terminated_early(self) -> bool:
        return len(self.log) < self.budget

    def updates(self) -> list[EdgeUpdate]:
        return [entry.update for entry in self.log]


class GreedyEditor(ABC):
    """
    Budgeted greedy editor over a fixed partition.

    Subclasses name the two candidate families and the direction of the
    objective: ``sign = +1`` maximizes permanence loss, ``sign = -1``
    maximizes permanence gain.
    """

    sign: ClassVar[int]
    name: ClassVar[str]
    run_class: ClassVar[type[EditRun]] = EditRun

    def __init__(self, full_recompute: bool | None = None) -> None:
        """
        Args:
            full_recompute: Score graph-level changes from scratch instead of
                through the incremental cache. Defaults to settings.
        """
        self.full_recompute = settings.full_recompute if full_recompute is None else full_recompute

    @abstractmethod
    def primary_candidates(
        self, g: Graph, cs: CommunityStructure, community: int
    ) -> Iterator[Candidate]:
        """Inter-community family; preferred on equal graph-level score."""

    @abstractmethod
    def secondary_candidates(
        self, g: Graph, cs: CommunityStructure, community: int
    ) -> Iterator[Candidate]:
        """Intra-target family."""

    # ------------------------------------------------------------------

    def objective(self, before: float, after: float) -> float:
        """Loss (sign +1) or gain (sign -1) of moving from ``before`` to ``after``."""
        return before - after if self.sign > 0 else after - before

    def score(
        self, cache: PermanenceCache, candidates: Iterable[Candidate]
    ) -> list[ScoredCandidate]:
        """Single-vertex permanence difference of every candidate."""
        g, cs = cache.graph, cache.partition
        scored = []
        for candidate in candidates:
            after = vertex_permanence_after(g, cs, candidate.scored, candidate.update).permanence
            scored.append(
                ScoredCandidate(candidate, self.objective(cache.permanence(candidate.scored), after))
            )
        return scored

    def best(self, cache: PermanenceCache, candidates: Iterable[Candidate]) -> ScoredCandidate | None:
        """Highest vertex delta; ties go to the smallest label pair."""
        scored = self.score(cache, candidates)
        if not scored:
            return None
        return min(scored, key=lambda s: (-s.vertex_delta, s.candidate.labels))

    def graph_delta(self, cache: PermanenceCache, update: EdgeUpdate) -> float:
        """Graph-level permanence loss or gain of applying ``update``."""
        if self.full_recompute:
            after = graph_permanence(cache.graph.with_update(update), cache.partition)
        else:
            after = cache.preview(update).graph_permanence
        return self.objective(cache.graph_permanence, after)

    def choose(
        self, cache: PermanenceCache, community: int
    ) -> tuple[ScoredCandidate, float] | None:
        """The update to apply this iteration, with its graph-level score."""
        g, cs = cache.graph, cache.partition
        first = self.best(cache, self.primary_candidates(g, cs, community))
        second = self.best(cache, self.secondary_candidates(g, cs, community))
        first_delta = self.graph_delta(cache, first.update) if first else None
        second_delta = self.graph_delta(cache, second.update) if second else None

        logger.debug(
            f"{self.name}: primary={first.update if first else None} ({first_delta}), "
            f"secondary={second.update if second else None} ({second_delta})"
        )

        if first is not None and first_delta is not None and first_delta > 0:
            if second_delta is None or first_delta >= second_delta:
                return first, first_delta
        if second is not None and second_delta is not None and second_delta > 0:
            return second, second_delta
        return None

    def run(
        self,
        g: Graph,
        cs: CommunityStructure,
        community: int,
        budget: int,
    ) -> EditRun:
        """
        Spend up to ``budget`` single-edge updates on ``g``; ``g`` itself is unchanged.

        Raises:
            BudgetError: budget < 1
        """
        if budget < 1:
            raise BudgetError(f"budget must be >= 1, got {budget}", budget=budget)
        cs.validate_for(g)

        cache = PermanenceCache.build(g, cs)
        initial = cache.graph_permanence
        log: list[EditLogEntry] = []

        for iteration in range(1, budget + 1):
            choice = self.choose(cache, community)
            if choice is None:
                logger.info(f"{self.name}: no positive update at iteration {iteration}, stopping")
                break
            picked, delta = choice
            working = cache.graph
            if self.full_recompute:
                cache = PermanenceCache.build(working.with_update(picked.update), cs)
            else:
                cache = rescore_after_update(cache, working, cs, picked.update)

            update = picked.update
            log.append(
                EditLogEntry(
                    iteration=iteration,
                    update=update,
                    u_label=g.label(update.u),
                    v_label=g.label(update.v),
                    vertex_delta=picked.vertex_delta,
                    graph_delta=delta,
                    graph_permanence=cache.graph_permanence,
                )
            )
            logger.debug(
                f"{self.name}: iter {iteration} {update.action.value} "
                f"({g.label(update.u)}, {g.label(update.v)}) delta={delta:.6g}"
            )

        logger.info(
            f"{self.name}: applied {len(log)}/{budget} updates, "
            f"permanence {initial:.4f} -> {cache.graph_permanence:.4f}"
        )
        return self.run_class(
            input_graph=g,
            partition=cs,
            community_index=community,
            target=cs.communities[community],
            budget=budget,
            output_graph=cache.graph,
            initial_permanence=initial,
            final_permanence=cache.graph_permanence,
            log=log,
        )


def target_index(cs: CommunityStructure, target: Collection[int] | int) -> int:
    """Community index given either an index or the community's node set."""
    if isinstance(target, int):
        if not 0 <= target < cs.k:
            raise PartitionError(f"community index {target} out of range 0..{cs.k - 1}")
        return target
    return cs.index_of(target)

"""
Permanence-loss community deception.

Hides a target community by adding edges from its members towards their
community of maximum external pull and deleting edges inside it, one update
per budget unit, each chosen to maximize the permanence loss
Perm(G) - Perm(G').
"""

import logging
from collections.abc import Collection, Iterator
from typing import ClassVar

from community_veil.community.structure import CommunityStructure
from community_veil.editing.candidates import Candidate, inter_candidates, intra_candidates
from community_veil.editing.greedy import EditRun, GreedyEditor, target_index
from community_veil.graph import Graph
from community_veil.models import EdgeAction, EdgeUpdate
from community_veil.permanence.cache import PermanenceCache

logger = logging.getLogger(__name__)


class DeceptionRun(EditRun):
    """Edit run whose log entries carry permanence losses."""


class NeuralDeceiver(GreedyEditor):
    """Inter-community additions vs intra-target deletions, maximizing loss."""

    sign: ClassVar[int] = 1
    name: ClassVar[str] = "deception"
    run_class: ClassVar[type[EditRun]] = DeceptionRun

    def primary_candidates(
        self, g: Graph, cs: CommunityStructure, community: int
    ) -> Iterator[Candidate]:
        return inter_candidates(g, cs, community, EdgeAction.ADD)

    def secondary_candidates(
        self, g: Graph, cs: CommunityStructure, community: int
    ) -> Iterator[Candidate]:
        return intra_candidates(g, cs, community, EdgeAction.DELETE)


def _best(
    g: Graph, cs: CommunityStructure, target: Collection[int], primary: bool
) -> tuple[EdgeUpdate, float] | None:
    editor = NeuralDeceiver()
    community = target_index(cs, target)
    cache = PermanenceCache.build(g, cs)
    family = editor.primary_candidates if primary else editor.secondary_candidates
    best = editor.best(cache, family(g, cs, community))
    return (best.update, best.vertex_delta) if best else None


def best_add_candidate(
    g: Graph, cs: CommunityStructure, target: Collection[int]
) -> tuple[EdgeUpdate, float] | None:
    """
    Best inter-community addition for the target community.

    Maximizes Perm(u, G) - Perm(u, G + (u, v)) over u in the target and v in
    u's community of maximum external pull; ties by (label(u), label(v)).
    """
    return _best(g, cs, target, primary=True)


def best_delete_candidate(
    g: Graph, cs: CommunityStructure, target: Collection[int]
) -> tuple[EdgeUpdate, float] | None:
    """
    Best intra-target deletion.

    Maximizes Perm(w, G) - Perm(w, G - (w, z)) with w the smaller-label
    endpoint; ties by (label(w), label(z)).
    """
    return _best(g, cs, target, primary=False)


def neural(
    g: Graph,
    cs: CommunityStructure,
    target: Collection[int] | int,
    budget: int,
    full_recompute: bool | None = None,
) -> DeceptionRun:
    """
    Run greedy deception on ``target`` with ``cs`` held fixed.

    Args:
        g: Input graph (not modified)
        cs: Partition detected on ``g``
        target: The target community, as its node set or its index in ``cs``
        budget: Maximum number of updates, >= 1
        full_recompute: Score graph-level losses from scratch (debug)

    Raises:
        PartitionError: ``target`` is not a community of ``cs``
        BudgetError: budget < 1
    """
    community = target_index(cs, target)
    run = NeuralDeceiver(full_recompute).run(g, cs, community, budget)
    assert isinstance(run, DeceptionRun)
    return run

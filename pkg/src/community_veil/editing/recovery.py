"""
Permanence-gain recovery of a hidden community.

The mirror image of deception: deletes edges from target members towards
their community of maximum external pull and adds edges inside the target,
each update chosen to maximize the permanence gain Perm(G'') - Perm(G').
Recovery has no knowledge of which edges deception touched, so it may
delete edges that were present in the original graph.
"""

import logging
from collections.abc import Collection, Iterator
from dataclasses import dataclass, field
from typing import ClassVar

from community_veil.community.structure import CommunityStructure, match_community
from community_veil.editing.candidates import Candidate, inter_candidates, intra_candidates
from community_veil.editing.greedy import EditRun, GreedyEditor
from community_veil.graph import Graph
from community_veil.models import EdgeAction, EdgeUpdate
from community_veil.permanence.cache import PermanenceCache

logger = logging.getLogger(__name__)


@dataclass
class RecoveryRun(EditRun):
    """Edit run whose log entries carry permanence gains."""

    requested_target: frozenset[int] = field(default_factory=frozenset)


class NeuralRecoverer(GreedyEditor):
    """Inter-community deletions vs intra-target additions, maximizing gain."""

    sign: ClassVar[int] = -1
    name: ClassVar[str] = "recovery"
    run_class: ClassVar[type[EditRun]] = RecoveryRun

    def primary_candidates(
        self, g: Graph, cs: CommunityStructure, community: int
    ) -> Iterator[Candidate]:
        return inter_candidates(g, cs, community, EdgeAction.DELETE)

    def secondary_candidates(
        self, g: Graph, cs: CommunityStructure, community: int
    ) -> Iterator[Candidate]:
        return intra_candidates(g, cs, community, EdgeAction.ADD)


def _best(
    g: Graph, cs: CommunityStructure, target: Collection[int], primary: bool
) -> tuple[EdgeUpdate, float] | None:
    editor = NeuralRecoverer()
    community = match_community(cs, target)
    cache = PermanenceCache.build(g, cs)
    family = editor.primary_candidates if primary else editor.secondary_candidates
    best = editor.best(cache, family(g, cs, community))
    return (best.update, best.vertex_delta) if best else None


def best_inter_delete_candidate(
    g: Graph, cs: CommunityStructure, target: Collection[int]
) -> tuple[EdgeUpdate, float] | None:
    """Best deletion towards a member's maximum-external-pull community."""
    return _best(g, cs, target, primary=True)


def best_intra_add_candidate(
    g: Graph, cs: CommunityStructure, target: Collection[int]
) -> tuple[EdgeUpdate, float] | None:
    """Best addition between non-adjacent target members."""
    return _best(g, cs, target, primary=False)


def r_neural(
    g_prime: Graph,
    cs: CommunityStructure,
    target: Collection[int],
    budget: int,
    full_recompute: bool | None = None,
) -> RecoveryRun:
    """
    Run greedy recovery on the community of ``cs`` that best matches ``target``.

    With the partition detected on the original graph (oracle mode) the
    target is one of its communities; with a partition re-detected on the
    deceived graph the target is mapped by highest Jaccard similarity.

    Raises:
        PartitionError: empty target
        UnknownNodeError: target references unknown nodes
        BudgetError: budget < 1
    """
    community = match_community(cs, target)
    requested = frozenset(target)
    if cs.communities[community] != requested:
        logger.info(
            f"Target of {len(requested)} nodes mapped to community {community} "
            f"of {len(cs.communities[community])} nodes"
        )
    run = NeuralRecoverer(full_recompute).run(g_prime, cs, community, budget)
    assert isinstance(run, RecoveryRun)
    run.requested_target = requested
    return run

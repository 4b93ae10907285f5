"""
Candidate edge updates for the greedy editors.

Two candidate families exist, each usable as an addition or a deletion:

- inter: pairs (u, v) with u in the target and v in the community of
  maximum external pull for u;
- intra: pairs (w, z) inside the target, scored on the endpoint with the
  lexicographically smaller label.

Deception adds inter pairs and deletes intra pairs; recovery does the
reverse.
"""

import logging
from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass

from community_veil.community.structure import CommunityStructure
from community_veil.graph import Graph
from community_veil.models import EdgeAction, EdgeUpdate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Candidate:
    """A legal update together with the vertex whose permanence ranks it."""

    update: EdgeUpdate
    scored: int  # vertex whose permanence difference ranks this candidate
    other: int
    labels: tuple[str, str]  # (label(scored), label(other)), the tie-break key


@dataclass(frozen=True)
class ScoredCandidate:
    candidate: Candidate
    vertex_delta: float

    @property
    def update(self) -> EdgeUpdate:
        return self.candidate.update


def external_pull_community(g: Graph, cs: CommunityStructure, u: int) -> int | None:
    """
    Community C' != community(u) holding the most neighbors of ``u``.

    Ties go to the smallest community index; None when ``u`` has no
    inter-community edge.
    """
    own = cs.community_of(u)
    pull = Counter(cs.assignment[w] for w in g.neighbors(u) if cs.assignment[w] != own)
    if not pull:
        return None
    top = max(pull.values())
    return min(index for index, count in pull.items() if count == top)


def _ordered(g: Graph, a: int, b: int) -> tuple[int, int]:
    return (a, b) if g.label(a) <= g.label(b) else (b, a)


def inter_candidates(
    g: Graph, cs: CommunityStructure, community: int, action: EdgeAction
) -> Iterator[Candidate]:
    """
    Pairs (u, v), u in the target, v in u's maximum-external-pull community.

    Additions range over absent edges, deletions over present ones. Target
    vertices without any inter-community edge have no such community and
    contribute nothing.
    """
    want_edge = action == EdgeAction.DELETE
    for u in sorted(cs.communities[community]):
        pull = external_pull_community(g, cs, u)
        if pull is None:
            continue
        for v in sorted(cs.communities[pull]):
            if g.has_edge(u, v) == want_edge:
                yield Candidate(
                    update=EdgeUpdate(action=action, u=u, v=v),
                    scored=u,
                    other=v,
                    labels=(g.label(u), g.label(v)),
                )


def intra_candidates(
    g: Graph, cs: CommunityStructure, community: int, action: EdgeAction
) -> Iterator[Candidate]:
    """
    Pairs (w, z) inside the target; w is the endpoint with the smaller label.

    Deletions range over present edges, additions over absent ones.
    """
    want_edge = action == EdgeAction.DELETE
    members = sorted(cs.communities[community])
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            if g.has_edge(a, b) != want_edge:
                continue
            w, z = _ordered(g, a, b)
            yield Candidate(
                update=EdgeUpdate(action=action, u=w, v=z),
                scored=w,
                other=z,
                labels=(g.label(w), g.label(z)),
            )

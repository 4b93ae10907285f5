"""
Vertex and graph permanence.

Perm(v) = I(v) / (max(E_max(v), 1) * deg(v)) - (1 - C_in(v))

where I(v) counts neighbors inside v's community, E_max(v) is the largest
number of neighbors v has in any single other community and C_in(v) is the
edge density among v's internal neighbors. Conventions: C_in = 0 with fewer
than two internal neighbors; Perm = 0 for isolated vertices.
"""

import itertools
import logging
import math
from collections import Counter
from collections.abc import Callable, Collection
from dataclasses import dataclass

from community_veil.community.structure import CommunityStructure
from community_veil.exceptions import MetricError
from community_veil.graph import Graph
from community_veil.models import EdgeAction, EdgeUpdate

logger = logging.getLogger(__name__)

NeighborFn = Callable[[int], Collection[int]]


@dataclass(frozen=True, slots=True)
class VertexPermanenceParts:
    """The terms of the permanence formula for one vertex."""

    internal_degree: int
    max_external_pull: int
    degree: int
    internal_clustering: float
    permanence: float

    def as_row(self, label: str) -> list[object]:
        """CSV row: label,I,Emax,deg,Cin,perm."""
        return [
            label,
            self.internal_degree,
            self.max_external_pull,
            self.degree,
            repr(self.internal_clustering),
            repr(self.permanence),
        ]


ISOLATED = VertexPermanenceParts(0, 0, 0, 0.0, 0.0)


def compute_parts(neighbors_of: NeighborFn, assignment: tuple[int, ...], v: int) -> VertexPermanenceParts:
    """
    Evaluate the permanence terms of ``v`` from a neighbor lookup.

    Taking the lookup as a function lets callers score hypothetical graphs
    (see :class:`ToggledNeighbors`) without copying anything.
    """
    neighbors = neighbors_of(v)
    degree = len(neighbors)
    if degree == 0:
        return ISOLATED

    own = assignment[v]
    internal = sorted(w for w in neighbors if assignment[w] == own)
    external = Counter(assignment[w] for w in neighbors if assignment[w] != own)
    internal_degree = len(internal)
    max_external = max(external.values(), default=0)

    if internal_degree >= 2:
        links = sum(1 for a, b in itertools.combinations(internal, 2) if b in neighbors_of(a))
        possible = internal_degree * (internal_degree - 1) // 2
        clustering = links / possible
    else:
        clustering = 0.0

    permanence = internal_degree / (max(max_external, 1) * degree) - (1.0 - clustering)
    return VertexPermanenceParts(internal_degree, max_external, degree, clustering, permanence)


class ToggledNeighbors:
    """Neighbor lookup of ``g`` as if ``update`` had been applied."""

    def __init__(self, g: Graph, update: EdgeUpdate) -> None:
        g.validate_update(update)
        self._g = g
        self._u, self._v = update.endpoints
        self._adding = update.action == EdgeAction.ADD

    def __call__(self, w: int) -> Collection[int]:
        neighbors = self._g.neighbors(w)
        if w == self._u:
            other = self._v
        elif w == self._v:
            other = self._u
        else:
            return neighbors
        return neighbors | {other} if self._adding else neighbors - {other}


def vertex_permanence(g: Graph, cs: CommunityStructure, v: int) -> VertexPermanenceParts:
    """
    Permanence of one vertex.

    Raises:
        UnknownNodeError: ``v`` is not a node of ``g``
        PartitionError: ``cs`` does not cover ``g``'s nodes
    """
    cs.validate_for(g)
    g.label(v)
    return compute_parts(g.neighbors, cs.assignment, v)


def vertex_permanence_after(
    g: Graph, cs: CommunityStructure, v: int, update: EdgeUpdate
) -> VertexPermanenceParts:
    """Permanence of ``v`` in ``g`` with ``update`` applied, without building that graph."""
    return compute_parts(ToggledNeighbors(g, update), cs.assignment, v)


def mean_permanence(values: Collection[float]) -> float:
    if not values:
        raise MetricError("graph permanence is undefined on an empty graph")
    return math.fsum(values) / len(values)


def graph_permanence(g: Graph, cs: CommunityStructure) -> float:
    """
    Perm(G): mean vertex permanence over all |V| nodes.

    Raises:
        MetricError: empty graph
    """
    cs.validate_for(g)
    return mean_permanence([compute_parts(g.neighbors, cs.assignment, v).permanence for v in g.nodes()])

"""
Laplacian spectra and eigenvector-similarity distance between graphs.

The distance compares the top-k Laplacian eigenvalues of two graphs, where k
is the smaller of the two counts needed to reach the requested share of
spectral energy. Lower means more similar.
"""

import logging

import networkx as nx
import numpy as np

from community_veil.config import settings
from community_veil.exceptions import EigensolverError, MetricError
from community_veil.graph import Graph
from community_veil.models import SpectralDistance

logger = logging.getLogger(__name__)


def laplacian_spectrum(g: Graph, tolerance: float | None = None) -> np.ndarray:
    """
    Eigenvalues of L = D - A in descending order.

    Values within ``tolerance`` of zero are snapped to 0.

    Raises:
        MetricError: empty graph
        EigensolverError: non-convergence or a clearly negative eigenvalue
    """
    n = g.node_count
    if n == 0:
        raise MetricError("spectrum of an empty graph is undefined")
    tolerance = settings.eigen_tolerance if tolerance is None else tolerance

    laplacian = nx.laplacian_matrix(g.nx, nodelist=list(g.nodes())).toarray().astype(float)
    try:
        values = np.linalg.eigvalsh(laplacian)
    except np.linalg.LinAlgError as e:
        raise EigensolverError(
            f"eigensolver did not converge: {e}", nodes=n, edges=g.edge_count
        ) from e

    if values.size and values.min() < -tolerance:
        raise EigensolverError(
            "Laplacian has a negative eigenvalue",
            nodes=n,
            min_eigenvalue=float(values.min()),
        )
    values[np.abs(values) <= tolerance] = 0.0
    return np.sort(values)[::-1]


def energy_rank(spectrum: np.ndarray, energy: float) -> int:
    """Smallest k >= 1 whose top-k eigenvalues hold ``energy`` of the total."""
    if spectrum.size == 0:
        return 0
    cumulative = np.cumsum(spectrum)
    total = cumulative[-1]
    if total <= 0:
        return 1
    return int(np.argmax(cumulative >= energy * total)) + 1


def spectral_distance(
    g1: Graph, g2: Graph, energy: float | None = None, pair: str = ""
) -> SpectralDistance:
    """
    Sum of squared differences of the top-k Laplacian eigenvalues.

    Args:
        g1, g2: Graphs to compare; node counts may differ
        energy: Spectral energy share used to pick k (default from settings)
        pair: Optional name recorded on the result

    Raises:
        EigensolverError: eigen-decomposition failed for either graph
    """
    energy = settings.energy_threshold if energy is None else energy
    first, second = laplacian_spectrum(g1), laplacian_spectrum(g2)
    k_first, k_second = energy_rank(first, energy), energy_rank(second, energy)
    k = min(k_first, k_second)
    value = float(np.sum((first[:k] - second[:k]) ** 2))
    logger.debug(f"spectral distance {pair or '(unnamed)'}: k={k} value={value:.6g}")
    return SpectralDistance(
        pair=pair, value=value, k=k, energy=energy, k_first=k_first, k_second=k_second
    )

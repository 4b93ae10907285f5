"""Tests for Laplacian spectra and spectral distance."""

import random

import numpy as np
import pytest

from community_veil.exceptions import MetricError
from community_veil.graph import Graph
from community_veil.metrics import energy_rank, laplacian_spectrum, spectral_distance
from tests.factories import random_instance


@pytest.fixture
def triangle() -> Graph:
    return Graph(["a", "b", "c"], [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def star() -> Graph:
    """Centre node 0 with three leaves."""
    return Graph(["0", "1", "2", "3"], [(0, 1), (0, 2), (0, 3)])


class TestLaplacianSpectrum:
    """Test suite for laplacian_spectrum."""

    def test_triangle(self, triangle: Graph):
        """K3 has eigenvalues 3, 3, 0."""
        np.testing.assert_allclose(laplacian_spectrum(triangle), [3.0, 3.0, 0.0], atol=1e-9)

    def test_star(self, star: Graph):
        """K1,3 has eigenvalues 4, 1, 1, 0."""
        np.testing.assert_allclose(laplacian_spectrum(star), [4.0, 1.0, 1.0, 0.0], atol=1e-9)

    def test_descending_and_non_negative(self):
        """Spectra are sorted descending with no negative values."""
        rng = random.Random(8)
        for _ in range(10):
            g, _ = random_instance(rng, rng.randint(2, 30), 0.2, 1)
            spectrum = laplacian_spectrum(g)
            assert np.all(spectrum[:-1] >= spectrum[1:])
            assert spectrum.min() >= 0.0
            # trace of L is the degree sum
            assert spectrum.sum() == pytest.approx(2 * g.edge_count)

    def test_zero_count_is_component_count(self):
        """Two disjoint edges give two zero eigenvalues."""
        g = Graph(["a", "b", "c", "d"], [(0, 1), (2, 3)])
        assert int(np.sum(laplacian_spectrum(g) == 0.0)) == 2

    def test_empty_graph(self):
        """A graph without nodes has no spectrum."""
        with pytest.raises(MetricError):
            laplacian_spectrum(Graph([]))


class TestEnergyRank:
    """Test suite for energy_rank."""

    def test_reaches_threshold(self):
        """[3, 1, 0]: 3/4 < 0.9, so two values are needed."""
        assert energy_rank(np.array([3.0, 1.0, 0.0]), 0.9) == 2

    def test_first_value_suffices(self):
        """A dominant first value is enough on its own."""
        assert energy_rank(np.array([9.0, 1.0, 0.0]), 0.9) == 1

    def test_zero_spectrum(self):
        """An edgeless spectrum compares one value."""
        assert energy_rank(np.zeros(3), 0.9) == 1


class TestSpectralDistance:
    """Test suite for spectral_distance."""

    def test_path_vs_triangle(self, path3: Graph, triangle: Graph):
        """[3, 1] against [3, 3] differ by 4."""
        result = spectral_distance(path3, triangle, energy=0.9, pair="P3,K3")

        assert result.k == 2
        assert result.value == pytest.approx(4.0)
        assert result.pair == "P3,K3"
        assert (result.k_first, result.k_second) == (2, 2)

    def test_different_sizes(self, star: Graph, triangle: Graph):
        """k is the smaller of the two energy ranks."""
        result = spectral_distance(star, triangle, energy=0.9)

        assert (result.k_first, result.k_second) == (3, 2)
        assert result.k == 2
        assert result.value == pytest.approx(5.0)

    def test_self_distance_is_zero(self, planted_graph: Graph):
        """A graph is at distance exactly 0 from itself."""
        assert spectral_distance(planted_graph, planted_graph.copy()).value == 0.0

    def test_symmetric(self, planted_graph: Graph, two_triangles: Graph):
        """Swapping the arguments gives the same distance."""
        forward = spectral_distance(planted_graph, two_triangles)
        backward = spectral_distance(two_triangles, planted_graph)
        assert forward.value == backward.value
        assert forward.k == backward.k

    def test_edgeless_vs_triangle(self, triangle: Graph):
        """An edgeless graph compares a single zero against 3."""
        result = spectral_distance(Graph(["x", "y", "z"]), triangle, energy=0.9)
        assert result.k == 1
        assert result.value == pytest.approx(9.0)

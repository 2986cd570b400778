# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

import math

import numpy as np
import pytest

from wavechar.errors import InputError
from wavechar.graph import Graph, SymmetricMatrix, laplacian, relabel
from wavechar.spectral import heat_wavelets, matrix_exponential_oracle, symmetric_eigendecomposition

from .factories import random_connected_graph, random_graph


class TestSymmetricEigendecomposition:
    def test_diagonal(self) -> None:
        result = symmetric_eigendecomposition(SymmetricMatrix.from_array(np.diag([3.0, 1.0, 2.0])))
        np.testing.assert_allclose(result.eigenvalues, [1.0, 2.0, 3.0], atol=1e-12)

    def test_p2_laplacian(self, p2: Graph) -> None:
        result = symmetric_eigendecomposition(laplacian(p2))
        np.testing.assert_allclose(result.eigenvalues, [0.0, 2.0], atol=1e-12)

    def test_k3_laplacian(self, k3: Graph) -> None:
        result = symmetric_eigendecomposition(laplacian(k3))
        np.testing.assert_allclose(result.eigenvalues, [0.0, 3.0, 3.0], atol=1e-12)

    def test_contract_on_random_laplacians(self, rng: np.random.Generator) -> None:
        for _ in range(30):
            g = random_graph(rng, int(rng.integers(1, 40)), 0.2)
            m = laplacian(g)
            result = symmetric_eigendecomposition(m)
            u = result.eigenvectors
            assert np.all(np.diff(result.eigenvalues) >= 0)
            assert result.eigenvalues[0] == pytest.approx(0.0, abs=1e-9)
            np.testing.assert_allclose(u @ u.T, np.eye(g.num_nodes), atol=1e-8)
            np.testing.assert_allclose(result.reconstruct(), m.values, atol=1e-8)

    def test_rejects_non_finite(self) -> None:
        with pytest.raises(InputError, match="non-finite"):
            symmetric_eigendecomposition(SymmetricMatrix(np.array([[np.inf]])))

    def test_empty_matrix(self) -> None:
        result = symmetric_eigendecomposition(SymmetricMatrix(np.zeros((0, 0))))
        assert result.eigenvalues.size == 0


class TestHeatWavelets:
    def test_single_node(self, single_node: Graph) -> None:
        np.testing.assert_allclose(heat_wavelets(single_node, 0.5).values, [[1.0]], atol=1e-15)

    def test_p2_closed_form(self, p2: Graph) -> None:
        near = (1.0 + math.exp(-1.0)) / 2.0
        far = (1.0 - math.exp(-1.0)) / 2.0
        psi = heat_wavelets(p2, 0.5)
        np.testing.assert_allclose(psi.values, [[near, far], [far, near]], atol=1e-12)
        np.testing.assert_allclose(psi.values, [[0.683940, 0.316060], [0.316060, 0.683940]], atol=1e-6)

    def test_rejects_non_positive_tau(self, p2: Graph) -> None:
        with pytest.raises(InputError, match="tau"):
            heat_wavelets(p2, 0.0)

    def test_matches_matrix_exponential(self, rng: np.random.Generator) -> None:
        for trial in range(200):
            g = random_connected_graph(rng, int(rng.integers(1, 61)), float(rng.uniform(0.02, 0.3)))
            tau = (0.1, 0.5, 2.0)[trial % 3]
            psi = heat_wavelets(g, tau).values
            expected = matrix_exponential_oracle(-laplacian(g), tau)
            assert np.max(np.abs(psi - expected)) <= 1e-8
            np.testing.assert_allclose(psi.sum(axis=0), np.ones(g.num_nodes), atol=1e-8)
            np.testing.assert_array_equal(psi, psi.T)
            assert psi.min() >= -1e-10

    def test_spectral_mapping(self, rng: np.random.Generator) -> None:
        g = random_connected_graph(rng, 25, 0.1)
        tau = 0.5
        laplacian_spectrum = symmetric_eigendecomposition(laplacian(g)).eigenvalues
        psi = heat_wavelets(g, tau)
        psi_spectrum = symmetric_eigendecomposition(SymmetricMatrix(psi.values)).eigenvalues
        np.testing.assert_allclose(psi_spectrum, np.sort(np.exp(-tau * laplacian_spectrum)), atol=1e-7)

    def test_permutation_equivariant(self, rng: np.random.Generator) -> None:
        for _ in range(10):
            g = random_connected_graph(rng, 20, 0.15)
            permutation = [int(x) for x in rng.permutation(g.num_nodes)]
            psi = heat_wavelets(g, 0.5).values
            permuted = heat_wavelets(relabel(g, permutation), 0.5).values
            p = np.zeros((g.num_nodes, g.num_nodes))
            p[permutation, range(g.num_nodes)] = 1.0
            np.testing.assert_allclose(permuted, p @ psi @ p.T, atol=1e-9)


class TestMatrixExponentialOracle:
    def test_zero_matrix(self) -> None:
        np.testing.assert_array_equal(matrix_exponential_oracle(SymmetricMatrix(np.zeros((3, 3))), 1.7), np.eye(3))

    def test_diagonal(self) -> None:
        result = matrix_exponential_oracle(SymmetricMatrix.from_array(np.diag([1.0, 2.0])), 1.0)
        np.testing.assert_allclose(result, np.diag([math.e, math.e**2]), rtol=1e-13)

    def test_p2_heat_kernel(self, p2: Graph) -> None:
        expected = heat_wavelets(p2, 0.5).values
        np.testing.assert_allclose(matrix_exponential_oracle(-laplacian(p2), 0.5), expected, atol=1e-8)

# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

import numpy as np
import pytest

from wavechar.errors import InputError
from wavechar.graph import Graph, k_hop_neighborhood, relabel
from wavechar.similarity import (
    SimilarityTable,
    SortedSignature,
    Variant,
    influence_transition,
    mdpa,
    mdpa_bruteforce_oracle,
    product_transition,
    similarity_transition,
    sorted_signature,
    topological_similarity,
)
from wavechar.spectral import heat_wavelets

from .factories import random_connected_graph, random_graph


def _mixed_list(rng: np.random.Generator, length: int) -> list[float]:
    # integers and dyadic rationals keep every sum exact
    values: list[float] = []
    for _ in range(length):
        if rng.random() < 0.5:
            values.append(float(rng.integers(-20, 21)))
        else:
            values.append(float(rng.integers(-2048, 2049)) / 64.0)
    return values


class TestMdpa:
    def test_identical_lists(self) -> None:
        assert mdpa([1, 2, 3], [1, 2, 3]) == 0.0

    def test_constant_lists(self) -> None:
        assert mdpa([0, 0], [1, 1]) == 2.0

    def test_against_all_assignments(self) -> None:
        assert mdpa(sorted([3, 1, 2]), sorted([2, 2, 2])) == 2.0
        assert mdpa_bruteforce_oracle([3, 1, 2], [2, 2, 2]) == 2.0

    def test_length_mismatch(self) -> None:
        with pytest.raises(InputError, match="lengths"):
            mdpa([1.0, 2.0], [1.0])

    def test_sorted_form_equals_bruteforce(self, rng: np.random.Generator) -> None:
        for _ in range(1000):
            length = int(rng.integers(2, 9))
            x = _mixed_list(rng, length)
            y = _mixed_list(rng, length)
            assert mdpa(sorted(x), sorted(y)) == mdpa_bruteforce_oracle(x, y)

    def test_is_a_metric(self, rng: np.random.Generator) -> None:
        for _ in range(200):
            x, y, z = (np.sort(rng.normal(size=7)) for _ in range(3))
            assert mdpa(x, y) >= 0.0
            assert mdpa(x, y) == mdpa(y, x)
            assert mdpa(x, x) == 0.0
            assert mdpa(x, z) <= mdpa(x, y) + mdpa(y, z) + 1e-12


class TestBruteforceOracle:
    def test_single_pair(self) -> None:
        assert mdpa_bruteforce_oracle([5], [7]) == 2.0

    def test_same_multiset(self) -> None:
        assert mdpa_bruteforce_oracle([1, 3], [3, 1]) == 0.0

    def test_length_cap(self) -> None:
        with pytest.raises(InputError, match="limited"):
            mdpa_bruteforce_oracle([0.0] * 9, [0.0] * 9)


class TestSortedSignature:
    def test_is_sorted_column(self, rng: np.random.Generator) -> None:
        g = random_connected_graph(rng, 12, 0.2)
        psi = heat_wavelets(g, 0.5)
        for i in range(g.num_nodes):
            signature = sorted_signature(psi, i)
            assert np.all(np.diff(signature.values) >= 0)
            np.testing.assert_array_equal(signature.values, np.sort(psi.column(i)))

    def test_rejects_unsorted_values(self) -> None:
        with pytest.raises(InputError, match="ascending"):
            SortedSignature(0, np.array([2.0, 1.0]))


class TestTopologicalSimilarity:
    def test_self_similarity(self, rng: np.random.Generator) -> None:
        psi = heat_wavelets(random_connected_graph(rng, 10, 0.2), 0.5)
        for i in range(psi.order):
            assert topological_similarity(psi, i, i) == 1.0

    def test_p2(self, p2: Graph) -> None:
        assert topological_similarity(heat_wavelets(p2, 0.5), 0, 1) == pytest.approx(1.0, abs=1e-12)

    def test_k3(self, k3: Graph) -> None:
        psi = heat_wavelets(k3, 0.5)
        for i in range(3):
            for j in range(3):
                assert topological_similarity(psi, i, j) == pytest.approx(1.0, abs=1e-12)

    def test_symmetric_and_bounded(self, rng: np.random.Generator) -> None:
        psi = heat_wavelets(random_connected_graph(rng, 15, 0.15), 0.5)
        for i in range(psi.order):
            for j in range(psi.order):
                s = topological_similarity(psi, i, j)
                assert 0.0 < s <= 1.0
                assert s == topological_similarity(psi, j, i)

    def test_permutation_invariant(self, rng: np.random.Generator) -> None:
        g = random_connected_graph(rng, 15, 0.2)
        permutation = [int(x) for x in rng.permutation(g.num_nodes)]
        psi = heat_wavelets(g, 0.5)
        permuted = heat_wavelets(relabel(g, permutation), 0.5)
        for i in range(g.num_nodes):
            for j in range(g.num_nodes):
                assert topological_similarity(permuted, permutation[i], permutation[j]) == pytest.approx(
                    topological_similarity(psi, i, j), abs=1e-9
                )


class TestTransitions:
    def test_isolated_node(self) -> None:
        g = Graph(1, ((),))
        psi = heat_wavelets(g, 0.5)
        for weights in (similarity_transition(g, psi, 0, 1), influence_transition(g, 0, 1)):
            assert weights.support == (0,)
            np.testing.assert_array_equal(weights.weights, [1.0])

    def test_k3_is_uniform(self, k3: Graph) -> None:
        psi = heat_wavelets(k3, 0.5)
        for v in range(3):
            np.testing.assert_allclose(similarity_transition(k3, psi, v, 1).weights, [1 / 3] * 3, atol=1e-12)
            np.testing.assert_allclose(influence_transition(k3, v, 1).weights, [1 / 3] * 3, atol=1e-15)

    def test_p2_similarity(self, p2: Graph) -> None:
        weights = similarity_transition(p2, heat_wavelets(p2, 0.5), 0, 1)
        np.testing.assert_allclose(weights.weights, [0.5, 0.5], atol=1e-12)

    def test_star_influence(self, star: Graph) -> None:
        weights = influence_transition(star, 0, 1)
        assert weights.as_dict() == pytest.approx({0: 0.4, 1: 0.2, 2: 0.2, 3: 0.2})

    def test_product_combines_both_factors(self, star: Graph) -> None:
        psi = heat_wavelets(star, 0.5)
        weights = product_transition(star, psi, 1, 2)
        raw = np.array([topological_similarity(psi, 1, u) * (1 + star.degrees[u]) for u in weights.support])
        np.testing.assert_allclose(weights.weights, raw / raw.sum(), atol=1e-15)

    def test_weights_form_distributions(self, rng: np.random.Generator) -> None:
        for _ in range(10):
            g = random_graph(rng, 15, 0.2)
            psi = heat_wavelets(g, 0.5)
            for v in range(g.num_nodes):
                for k in (1, 2, 3):
                    for weights in (
                        similarity_transition(g, psi, v, k),
                        influence_transition(g, v, k),
                        product_transition(g, psi, v, k),
                    ):
                        assert weights.support == k_hop_neighborhood(g, v, k)
                        assert v in weights.support
                        assert np.all(weights.weights >= 0)
                        assert weights.weights.sum() == pytest.approx(1.0, abs=1e-10)


class TestSimilarityTable:
    def test_rows_match_per_node_transitions(self, rng: np.random.Generator) -> None:
        for _ in range(5):
            g = random_graph(rng, 18, 0.15)
            psi = heat_wavelets(g, 0.5)
            table = SimilarityTable.build(g, psi, 3)
            for k in (1, 2, 3):
                matrices = {variant: table.transition_matrix(k, variant) for variant in Variant}
                for v in range(g.num_nodes):
                    expected = {
                        Variant.SIMILARITY: similarity_transition(g, psi, v, k),
                        Variant.INFLUENCE: influence_transition(g, v, k),
                        Variant.PRODUCT: product_transition(g, psi, v, k),
                    }
                    for variant, weights in expected.items():
                        row = matrices[variant][v]
                        np.testing.assert_allclose(row[list(weights.support)], weights.weights, atol=1e-12)
                        assert np.count_nonzero(row) <= len(weights.support)

    def test_rejects_hops_beyond_the_table(self, p2: Graph) -> None:
        table = SimilarityTable.build(p2, heat_wavelets(p2, 0.5), 2)
        with pytest.raises(InputError, match="outside"):
            table.transition_matrix(3, Variant.SIMILARITY)

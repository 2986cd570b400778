# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

import math

import networkx as nx
import numpy as np
import pytest

from wavechar.errors import InputError
from wavechar.graph import (
    AttributeMatrix,
    Graph,
    SymmetricMatrix,
    degree,
    from_edge_list,
    hop_distances,
    k_hop_neighborhood,
    laplacian,
    local_clustering_coefficient,
    relabel,
    structural_features,
)

from .factories import graph_from_edges, random_graph
from .oracles import to_networkx


class TestFromEdgeList:
    def test_single_edge(self) -> None:
        build = from_edge_list([(0, 1)], 2)
        assert build.graph.neighbors(0) == (1,)
        assert build.graph.neighbors(1) == (0,)
        assert build.dropped == 0

    def test_duplicates_and_self_loops_are_dropped(self) -> None:
        build = from_edge_list([(0, 1), (1, 0), (0, 0)], 2)
        assert build.graph == from_edge_list([(0, 1)], 2).graph
        assert build.dropped == 2

    def test_triangle(self, k3: Graph) -> None:
        assert [degree(k3, v) for v in range(3)] == [2, 2, 2]

    def test_out_of_range_index(self) -> None:
        with pytest.raises(InputError, match="outside"):
            from_edge_list([(0, 2)], 2)

    def test_adjacency_is_symmetric_for_random_edge_lists(self, rng: np.random.Generator) -> None:
        for _ in range(50):
            n = int(rng.integers(1, 15))
            edges = [(int(rng.integers(n)), int(rng.integers(n))) for _ in range(3 * n)]
            g = from_edge_list(edges, n).graph
            for v in range(n):
                assert list(g.neighbors(v)) == sorted(set(g.neighbors(v)))
                assert v not in g.neighbors(v)
                for u in g.neighbors(v):
                    assert v in g.neighbors(u)


class TestGraphValidation:
    def test_rejects_asymmetric_adjacency(self) -> None:
        with pytest.raises(InputError, match="symmetric"):
            Graph(2, ((1,), ()))

    def test_rejects_self_loop(self) -> None:
        with pytest.raises(InputError, match="self-loop"):
            Graph(1, ((0,),))

    def test_rejects_unsorted_neighbors(self) -> None:
        with pytest.raises(InputError, match="ascending"):
            Graph(3, ((2, 1), (0,), (0,)))


def test_degree(k3: Graph, p2: Graph, star: Graph) -> None:
    assert degree(k3, 0) == 2
    assert degree(p2, 1) == 1
    assert degree(star, 0) == 3
    with pytest.raises(InputError):
        degree(p2, 2)


class TestLaplacian:
    def test_p2(self, p2: Graph) -> None:
        np.testing.assert_array_equal(laplacian(p2).values, [[1.0, -1.0], [-1.0, 1.0]])

    def test_k3(self, k3: Graph) -> None:
        expected = np.full((3, 3), -1.0) + 3.0 * np.eye(3)
        np.testing.assert_array_equal(laplacian(k3).values, expected)

    def test_rows_sum_to_zero_and_match_networkx(self, rng: np.random.Generator) -> None:
        for _ in range(20):
            g = random_graph(rng, int(rng.integers(1, 20)), 0.3)
            values = laplacian(g).values
            np.testing.assert_array_equal(values.sum(axis=1), np.zeros(g.num_nodes))
            reference = nx.laplacian_matrix(to_networkx(g), nodelist=range(g.num_nodes)).toarray()
            np.testing.assert_array_equal(values, reference)


class TestSymmetricMatrix:
    def test_from_array_mirrors_upper_triangle(self) -> None:
        m = SymmetricMatrix.from_array([[1.0, 2.0], [5.0, 3.0]])
        np.testing.assert_array_equal(m.values, [[1.0, 2.0], [2.0, 3.0]])

    def test_rejects_asymmetric_values(self) -> None:
        with pytest.raises(InputError, match="symmetric"):
            SymmetricMatrix(np.array([[1.0, 2.0], [5.0, 3.0]]))

    def test_rejects_non_square(self) -> None:
        with pytest.raises(InputError, match="square"):
            SymmetricMatrix.from_array(np.zeros((2, 3)))


class TestKHopNeighborhood:
    def test_path(self, path3: Graph) -> None:
        assert k_hop_neighborhood(path3, 0, 1) == (0, 1)
        assert k_hop_neighborhood(path3, 0, 2) == (0, 1, 2)

    def test_isolated_node(self) -> None:
        g = Graph(2, ((), ()))
        for k in (1, 2, 5):
            assert k_hop_neighborhood(g, 1, k) == (1,)

    def test_rejects_zero_hops(self, p2: Graph) -> None:
        with pytest.raises(InputError):
            k_hop_neighborhood(p2, 0, 0)

    def test_monotone_in_k(self, rng: np.random.Generator) -> None:
        for _ in range(20):
            g = random_graph(rng, 12, 0.2)
            for v in range(g.num_nodes):
                for k in range(1, 5):
                    assert set(k_hop_neighborhood(g, v, k)) <= set(k_hop_neighborhood(g, v, k + 1))

    def test_equivariant_under_relabeling(self, rng: np.random.Generator) -> None:
        for _ in range(20):
            g = random_graph(rng, 10, 0.25)
            permutation = [int(x) for x in rng.permutation(g.num_nodes)]
            h = relabel(g, permutation)
            for v in range(g.num_nodes):
                for k in (1, 2, 3):
                    image = sorted(permutation[u] for u in k_hop_neighborhood(g, v, k))
                    assert list(k_hop_neighborhood(h, permutation[v], k)) == image

    def test_agrees_with_hop_distances(self, rng: np.random.Generator) -> None:
        g = random_graph(rng, 15, 0.15)
        hops = hop_distances(g, 3)
        for v in range(g.num_nodes):
            for k in (1, 2, 3):
                assert k_hop_neighborhood(g, v, k) == tuple(int(u) for u in np.flatnonzero(hops[v] <= k))


def test_hop_distances_are_capped(path3: Graph) -> None:
    np.testing.assert_array_equal(hop_distances(path3, 1), [[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    disconnected = Graph(2, ((), ()))
    np.testing.assert_array_equal(hop_distances(disconnected, 4), [[0, 5], [5, 0]])


def test_relabel_rejects_non_permutation(p2: Graph) -> None:
    with pytest.raises(InputError, match="permutation"):
        relabel(p2, [0, 0])


class TestClustering:
    def test_triangle(self, k3: Graph) -> None:
        assert local_clustering_coefficient(k3, 1) == 1.0

    def test_path_center(self, path3: Graph) -> None:
        assert local_clustering_coefficient(path3, 1) == 0.0

    def test_k4_minus_edge(self) -> None:
        g = graph_from_edges([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)], 4)
        assert local_clustering_coefficient(g, 0) == pytest.approx(2.0 / 3.0)

    def test_matches_networkx(self, rng: np.random.Generator) -> None:
        for _ in range(20):
            g = random_graph(rng, 15, 0.35)
            reference = nx.clustering(to_networkx(g))
            for v in range(g.num_nodes):
                assert local_clustering_coefficient(g, v) == pytest.approx(reference[v], abs=1e-12)


class TestStructuralFeatures:
    def test_p2(self, p2: Graph) -> None:
        np.testing.assert_allclose(structural_features(p2).values, [[math.log(2), 0.0]] * 2)

    def test_k3(self, k3: Graph) -> None:
        np.testing.assert_allclose(structural_features(k3).values, [[math.log(3), 1.0]] * 3)

    def test_isolated_node(self, single_node: Graph) -> None:
        np.testing.assert_array_equal(structural_features(single_node).values, [[0.0, 0.0]])

    def test_clustering_column_matches_per_node_coefficient(self, rng: np.random.Generator) -> None:
        g = random_graph(rng, 20, 0.3)
        column = structural_features(g).column(1)
        expected = [local_clustering_coefficient(g, v) for v in range(g.num_nodes)]
        np.testing.assert_allclose(column, expected, atol=1e-12)

    def test_permutation_equivariant(self, rng: np.random.Generator) -> None:
        g = random_graph(rng, 12, 0.3)
        permutation = [int(x) for x in rng.permutation(g.num_nodes)]
        original = structural_features(g).values
        permuted = structural_features(relabel(g, permutation)).values
        np.testing.assert_array_equal(permuted[permutation], original)


class TestAttributeMatrix:
    def test_from_rows_accepts_a_single_column(self) -> None:
        attrs = AttributeMatrix.from_rows([1.0, 2.0])
        assert (attrs.num_nodes, attrs.dimension) == (2, 1)

    def test_rejects_non_finite(self) -> None:
        with pytest.raises(InputError, match="non-finite"):
            AttributeMatrix.from_rows([[1.0], [float("nan")]])

    def test_rejects_empty_feature_set(self) -> None:
        with pytest.raises(InputError, match="at least one"):
            AttributeMatrix(np.zeros((3, 0)))

    def test_column_index_checked(self) -> None:
        with pytest.raises(InputError):
            AttributeMatrix.from_rows([[1.0]]).column(1)

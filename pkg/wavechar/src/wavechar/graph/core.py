# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np
from numpy.typing import NDArray
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from wavechar.errors import InputError


@dataclass(frozen=True)
class Graph:
    """Immutable undirected, unweighted simple graph on nodes ``0..num_nodes-1``.

    ``adjacency[v]`` is the ascending, duplicate-free tuple of neighbors of ``v``.
    """

    num_nodes: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.num_nodes < 0:
            raise InputError(f"node count must be non-negative, got {self.num_nodes}")
        if len(self.adjacency) != self.num_nodes:
            raise InputError(f"adjacency has {len(self.adjacency)} lists for {self.num_nodes} nodes")

        neighbor_sets = [frozenset(neighbors) for neighbors in self.adjacency]
        for v, neighbors in enumerate(self.adjacency):
            if any(u < 0 or u >= self.num_nodes for u in neighbors):
                raise InputError(f"node {v} has a neighbor outside 0..{self.num_nodes - 1}")
            if any(a >= b for a, b in zip(neighbors, neighbors[1:], strict=False)):
                raise InputError(f"neighbors of node {v} are not strictly ascending")
            if v in neighbor_sets[v]:
                raise InputError(f"node {v} has a self-loop")
            if any(v not in neighbor_sets[u] for u in neighbors):
                raise InputError(f"adjacency of node {v} is not symmetric")

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_node(v)
        return self.adjacency[v]

    @cached_property
    def num_edges(self) -> int:
        return sum(len(neighbors) for neighbors in self.adjacency) // 2

    @cached_property
    def degrees(self) -> NDArray[np.int64]:
        return np.fromiter((len(neighbors) for neighbors in self.adjacency), dtype=np.int64, count=self.num_nodes)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v, neighbors in enumerate(self.adjacency):
            for u in neighbors:
                if v < u:
                    yield v, u

    def sparse_adjacency(self) -> csr_matrix:
        rows = np.repeat(np.arange(self.num_nodes), self.degrees)
        cols = np.fromiter((u for neighbors in self.adjacency for u in neighbors), dtype=np.int64, count=len(rows))
        data = np.ones(len(rows), dtype=np.float64)
        return csr_matrix((data, (rows, cols)), shape=(self.num_nodes, self.num_nodes))

    def adjacency_matrix(self) -> NDArray[np.float64]:
        matrix = np.zeros((self.num_nodes, self.num_nodes), dtype=np.float64)
        for v, neighbors in enumerate(self.adjacency):
            matrix[v, list(neighbors)] = 1.0
        return matrix

    def _check_node(self, v: int) -> None:
        if not 0 <= v < self.num_nodes:
            raise InputError(f"node {v} is outside 0..{self.num_nodes - 1}")


class EdgeListBuild(NamedTuple):
    graph: Graph
    # self-loops and repeated edges removed while building
    dropped: int


def from_edge_list(edges: Iterable[tuple[int, int]], num_nodes: int) -> EdgeListBuild:
    if num_nodes < 0:
        raise InputError(f"node count must be non-negative, got {num_nodes}")

    neighbor_sets: list[set[int]] = [set() for _ in range(num_nodes)]
    dropped = 0
    for u, v in edges:
        if not (0 <= u < num_nodes and 0 <= v < num_nodes):
            raise InputError(f"edge ({u}, {v}) references a node outside 0..{num_nodes - 1}")
        if u == v or v in neighbor_sets[u]:
            dropped += 1
            continue
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)

    adjacency = tuple(tuple(sorted(neighbors)) for neighbors in neighbor_sets)
    return EdgeListBuild(Graph(num_nodes, adjacency), dropped)


def degree(g: Graph, v: int) -> int:
    return len(g.neighbors(v))


def k_hop_neighborhood(g: Graph, v: int, k: int) -> tuple[int, ...]:
    """Nodes at breadth-first distance at most ``k`` from ``v``, ``v`` included, ascending."""
    g.neighbors(v)
    if k < 1:
        raise InputError(f"hop count must be at least 1, got {k}")

    distance = {v: 0}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        if distance[u] == k:
            continue
        for w in g.adjacency[u]:
            if w not in distance:
                distance[w] = distance[u] + 1
                queue.append(w)

    return tuple(sorted(distance))


def hop_distances(g: Graph, max_hops: int) -> NDArray[np.int64]:
    """All-pairs hop distances, with every distance above ``max_hops`` reported as ``max_hops + 1``."""
    if max_hops < 1:
        raise InputError(f"hop count must be at least 1, got {max_hops}")
    if g.num_nodes == 0:
        return np.zeros((0, 0), dtype=np.int64)

    distances = shortest_path(g.sparse_adjacency(), method="D", directed=False, unweighted=True)
    capped = np.where(distances <= max_hops, distances, max_hops + 1)
    return capped.astype(np.int64)


def relabel(g: Graph, permutation: Sequence[int]) -> Graph:
    """The isomorphic copy of ``g`` in which node ``i`` becomes ``permutation[i]``."""
    if sorted(permutation) != list(range(g.num_nodes)):
        raise InputError(f"not a permutation of 0..{g.num_nodes - 1}")

    adjacency: list[tuple[int, ...]] = [()] * g.num_nodes
    for v, neighbors in enumerate(g.adjacency):
        adjacency[permutation[v]] = tuple(sorted(permutation[u] for u in neighbors))
    return Graph(g.num_nodes, tuple(adjacency))

# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

from dataclasses import dataclass

import numpy as np
from scipy.sparse.csgraph import shortest_path

from wavechar.errors import InputError
from wavechar.graph import Graph
from wavechar.utils import console

from .collection import GraphCollection


@dataclass(frozen=True)
class DatasetStatistics:
    num_graphs: int
    min_nodes: int
    max_nodes: int
    min_density: float
    max_density: float
    min_diameter: int
    max_diameter: int
    num_labeled: int
    num_positive: int


def density(g: Graph) -> float:
    n = g.num_nodes
    if n < 2:
        return 0.0
    return 2.0 * g.num_edges / (n * (n - 1))


def diameter(g: Graph) -> int:
    """Largest finite hop distance; disconnected pairs are ignored."""
    if g.num_nodes < 2:
        return 0
    distances = shortest_path(g.sparse_adjacency(), method="D", directed=False, unweighted=True)
    finite = distances[np.isfinite(distances)]
    return int(finite.max())


def dataset_statistics(collection: GraphCollection) -> DatasetStatistics:
    if len(collection) == 0:
        raise InputError("cannot describe an empty collection")

    nodes = [g.num_nodes for g in collection.graphs]
    densities = [density(g) for g in collection.graphs]
    diameters = [diameter(g) for g in collection.graphs]
    labels = collection.labels or {}
    return DatasetStatistics(
        num_graphs=len(collection),
        min_nodes=min(nodes),
        max_nodes=max(nodes),
        min_density=min(densities),
        max_density=max(densities),
        min_diameter=min(diameters),
        max_diameter=max(diameters),
        num_labeled=len(labels),
        num_positive=sum(labels.values()),
    )


def print_summary(title: str, stats: DatasetStatistics) -> None:
    console.print_banner(
        title,
        [
            ("Graphs", str(stats.num_graphs)),
            ("Nodes", f"{stats.min_nodes} .. {stats.max_nodes}"),
            ("Density", f"{stats.min_density:.3f} .. {stats.max_density:.3f}"),
            ("Diameter", f"{stats.min_diameter} .. {stats.max_diameter}"),
            ("Labeled", f"{stats.num_labeled} ({stats.num_positive} positive)"),
        ],
    )

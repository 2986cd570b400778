# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from wavechar.errors import InputError

from .core import Graph


@dataclass(frozen=True, eq=False)
class AttributeMatrix:
    """Node features: row ``i`` is the observation ``a_i`` of node ``i``."""

    values: NDArray[np.float64]

    def __post_init__(self) -> None:
        if self.values.ndim != 2:
            raise InputError(f"attributes must be a 2-d matrix, got shape {self.values.shape}")
        if self.values.shape[1] < 1:
            raise InputError("attributes need at least one feature column")
        if not np.all(np.isfinite(self.values)):
            raise InputError("attributes contain non-finite entries")
        self.values.setflags(write=False)

    @classmethod
    def from_rows(cls, rows: ArrayLike) -> AttributeMatrix:
        values = np.array(rows, dtype=np.float64)
        if values.ndim == 1:
            values = values.reshape(-1, 1)
        return cls(values)

    @property
    def num_nodes(self) -> int:
        return int(self.values.shape[0])

    @property
    def dimension(self) -> int:
        return int(self.values.shape[1])

    def column(self, p: int) -> NDArray[np.float64]:
        if not 0 <= p < self.dimension:
            raise InputError(f"feature index {p} is outside 0..{self.dimension - 1}")
        return self.values[:, p]


def local_clustering_coefficient(g: Graph, v: int) -> float:
    neighbors = g.neighbors(v)
    d = len(neighbors)
    if d < 2:
        return 0.0

    neighbor_set = frozenset(neighbors)
    # each triangle through v is seen from both of its other corners
    links = sum(len(neighbor_set.intersection(g.adjacency[u])) for u in neighbors) // 2
    return 2.0 * links / (d * (d - 1))


def structural_features(g: Graph) -> AttributeMatrix:
    """Two columns per node: ``ln(1 + degree)`` and the local clustering coefficient."""
    degrees = g.degrees.astype(np.float64)
    if g.num_nodes == 0:
        return AttributeMatrix(np.zeros((0, 2), dtype=np.float64))

    adjacency = g.adjacency_matrix()
    # 0/1 products stay exact integers
    triangles = ((adjacency @ adjacency) * adjacency).sum(axis=1) / 2.0
    pairs = degrees * (degrees - 1.0)
    clustering = np.divide(2.0 * triangles, pairs, out=np.zeros_like(pairs), where=degrees >= 2)
    return AttributeMatrix(np.column_stack([np.log1p(degrees), clustering]))

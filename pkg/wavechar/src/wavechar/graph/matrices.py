# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from wavechar.errors import InputError

from .core import Graph


@dataclass(frozen=True, eq=False)
class SymmetricMatrix:
    """Dense real matrix whose entries satisfy ``values[i, j] == values[j, i]`` exactly.

    Only the upper triangle of the input to :meth:`from_array` is kept; the
    lower triangle is a mirror of it.
    """

    values: NDArray[np.float64]

    def __post_init__(self) -> None:
        if self.values.ndim != 2 or self.values.shape[0] != self.values.shape[1]:
            raise InputError(f"expected a square matrix, got shape {self.values.shape}")
        if not np.array_equal(self.values, self.values.T):
            raise InputError("matrix is not exactly symmetric")
        self.values.setflags(write=False)

    @classmethod
    def from_array(cls, array: ArrayLike) -> SymmetricMatrix:
        values = np.array(array, dtype=np.float64)
        if values.ndim != 2 or values.shape[0] != values.shape[1]:
            raise InputError(f"expected a square matrix, got shape {values.shape}")
        upper = np.triu(values)
        return cls(upper + np.triu(values, k=1).T)

    @property
    def order(self) -> int:
        return int(self.values.shape[0])

    def __neg__(self) -> SymmetricMatrix:
        return SymmetricMatrix(-self.values)


def laplacian(g: Graph) -> SymmetricMatrix:
    """Combinatorial Laplacian ``L = D - A``; every row sums to zero."""
    adjacency = g.adjacency_matrix()
    return SymmetricMatrix(np.diag(g.degrees.astype(np.float64)) - adjacency)

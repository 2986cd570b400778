# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from wavechar.constants import Defaults
from wavechar.errors import InputError, NumericError
from wavechar.graph import Graph, SymmetricMatrix, laplacian


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    """``M = U diag(eigenvalues) U^T`` with eigenvalues ascending; column ``i`` of U pairs with eigenvalue ``i``."""

    eigenvalues: NDArray[np.float64]
    eigenvectors: NDArray[np.float64]

    def reconstruct(self) -> NDArray[np.float64]:
        return (self.eigenvectors * self.eigenvalues) @ self.eigenvectors.T


@dataclass(frozen=True, eq=False)
class WaveletMatrix:
    """Heat-kernel wavelet coefficients; ``values[j, i]`` is the energy node j sends to node i."""

    values: NDArray[np.float64]
    tau: float

    @property
    def order(self) -> int:
        return int(self.values.shape[0])

    def column(self, i: int) -> NDArray[np.float64]:
        return self.values[:, i]


def symmetric_eigendecomposition(m: SymmetricMatrix) -> EigenDecomposition:
    if not np.all(np.isfinite(m.values)):
        raise InputError("cannot decompose a matrix with non-finite entries")
    if m.order == 0:
        return EigenDecomposition(np.zeros(0), np.zeros((0, 0)))

    try:
        eigenvalues, eigenvectors = np.linalg.eigh(m.values, UPLO="U")
    except np.linalg.LinAlgError as e:
        raise NumericError(f"symmetric eigensolver did not converge on a {m.order}x{m.order} matrix: {e}") from e

    decomposition = EigenDecomposition(eigenvalues, eigenvectors)
    residual = float(np.max(np.abs(decomposition.reconstruct() - m.values)))
    scale = max(1.0, float(np.max(np.abs(m.values))))
    if not residual <= Defaults.reconstruction_tolerance * scale:
        raise NumericError(
            f"eigendecomposition residual {residual:.3e} exceeds tolerance on a {m.order}x{m.order} matrix"
        )
    return decomposition


def heat_wavelets(g: Graph, tau: float) -> WaveletMatrix:
    """``Psi = U diag(exp(-tau * lambda)) U^T`` for the Laplacian of ``g``."""
    if not tau > 0:
        raise InputError(f"tau must be positive, got {tau}")

    decomposition = symmetric_eigendecomposition(laplacian(g))
    u = decomposition.eigenvectors
    psi = (u * np.exp(-tau * decomposition.eigenvalues)) @ u.T
    # floating addition commutes, so this is exactly symmetric
    psi = 0.5 * (psi + psi.T)
    return WaveletMatrix(psi, tau)


def matrix_exponential_oracle(m: SymmetricMatrix, t: float, taylor_terms: int = 18) -> NDArray[np.float64]:
    """``exp(t M)`` by scaling and squaring a truncated Taylor series.

    Independent of any eigensolver; used to cross-check :func:`heat_wavelets`.
    """
    n = m.order
    scaled = t * m.values
    norm = float(np.max(np.sum(np.abs(scaled), axis=1))) if n else 0.0
    squarings = max(0, math.ceil(math.log2(norm / 0.5))) if norm > 0.5 else 0
    scaled = scaled / 2.0**squarings

    identity = np.eye(n)
    result = identity.copy()
    for i in range(taylor_terms, 0, -1):
        result = identity + (scaled @ result) / i

    for _ in range(squarings):
        result = result @ result
    return result

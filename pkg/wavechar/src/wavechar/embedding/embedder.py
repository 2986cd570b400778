# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from wavechar.errors import InputError
from wavechar.graph import AttributeMatrix, Graph
from wavechar.similarity import SimilarityTable, Variant
from wavechar.spectral import WaveletMatrix, heat_wavelets

from .characteristic import sample_points
from .params import EmbeddingParams


@dataclass(frozen=True, eq=False)
class EmbeddingVector:
    """Concatenation over variant, then hop ``k = 1..k_max``, then feature, then sample point, then (Re, Im)."""

    values: NDArray[np.float64]

    @property
    def dimension(self) -> int:
        return int(self.values.size)


def _check_inputs(g: Graph, attrs: AttributeMatrix) -> None:
    if g.num_nodes == 0:
        raise InputError("cannot embed an empty graph")
    if attrs.num_nodes != g.num_nodes:
        raise InputError(f"attribute matrix has {attrs.num_nodes} rows for a graph of {g.num_nodes} nodes")


def _hop_block(
    table: SimilarityTable,
    attrs: AttributeMatrix,
    k: int,
    variant: Variant,
    ts: NDArray[np.float64],
) -> NDArray[np.float64]:
    # phi_G(t) = (1/N) sum_i sum_j P(j|i) e^{i t a_j} = (1/N) sum_j mass_j e^{i t a_j}
    mass = table.transition_matrix(k, variant).sum(axis=0)
    angles = attrs.values[:, :, np.newaxis] * ts
    n = attrs.num_nodes
    re = np.tensordot(mass, np.cos(angles), axes=1) / n
    im = np.tensordot(mass, np.sin(angles), axes=1) / n
    return np.stack([re, im], axis=-1).reshape(-1)


def k_hop_embedding(
    g: Graph,
    psi: WaveletMatrix,
    attrs: AttributeMatrix,
    k: int,
    params: EmbeddingParams,
    variant: Variant | str,
) -> NDArray[np.float64]:
    """The ``2 * m * d`` block of one hop scale and one transition variant."""
    _check_inputs(g, attrs)
    if not 1 <= k <= params.k_max:
        raise InputError(f"hop count {k} is outside 1..{params.k_max}")
    if psi.order != g.num_nodes:
        raise InputError(f"wavelet matrix of order {psi.order} does not match a graph of {g.num_nodes} nodes")

    table = SimilarityTable.build(g, psi, k)
    return _hop_block(table, attrs, k, Variant(variant), sample_points(params.d, params.t_max))


def embed_graph(g: Graph, attrs: AttributeMatrix, params: EmbeddingParams) -> EmbeddingVector:
    _check_inputs(g, attrs)

    psi = heat_wavelets(g, params.tau)
    table = SimilarityTable.build(g, psi, params.k_max)
    ts = sample_points(params.d, params.t_max)

    blocks = [
        _hop_block(table, attrs, k, variant, ts) for variant in params.variants for k in range(1, params.k_max + 1)
    ]
    return EmbeddingVector(np.concatenate(blocks))

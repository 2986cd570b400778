# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

from wavechar.similarity import Variant

from .characteristic import ComplexSample, graph_characteristic, node_characteristic, sample_points
from .collection import EmbeddingBatch, EmbeddingFailure, embed_collection
from .embedder import EmbeddingVector, embed_graph, k_hop_embedding
from .params import EmbeddingParams

__all__ = [
    "ComplexSample",
    "EmbeddingBatch",
    "EmbeddingFailure",
    "EmbeddingParams",
    "EmbeddingVector",
    "Variant",
    "embed_collection",
    "embed_graph",
    "graph_characteristic",
    "k_hop_embedding",
    "node_characteristic",
    "sample_points",
]

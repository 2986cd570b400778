# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

from .core import (
    EdgeListBuild,
    Graph,
    degree,
    from_edge_list,
    hop_distances,
    k_hop_neighborhood,
    relabel,
)
from .features import AttributeMatrix, local_clustering_coefficient, structural_features
from .matrices import SymmetricMatrix, laplacian

__all__ = [
    "AttributeMatrix",
    "EdgeListBuild",
    "Graph",
    "SymmetricMatrix",
    "degree",
    "from_edge_list",
    "hop_distances",
    "k_hop_neighborhood",
    "laplacian",
    "local_clustering_coefficient",
    "relabel",
    "structural_features",
]

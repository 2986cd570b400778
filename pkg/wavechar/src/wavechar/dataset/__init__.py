# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

from .collection import GraphCollection, load_dataset, read_targets
from .embeddings import read_embeddings, write_embeddings
from .statistics import DatasetStatistics, dataset_statistics, print_summary

__all__ = [
    "DatasetStatistics",
    "GraphCollection",
    "dataset_statistics",
    "load_dataset",
    "print_summary",
    "read_embeddings",
    "read_targets",
    "write_embeddings",
]

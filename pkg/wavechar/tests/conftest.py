# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

import json
import os
import pathlib
from collections.abc import Mapping, Sequence

import numpy as np
import pytest

from wavechar.graph import Graph

from .factories import DatasetWriter, graph_from_edges


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def p2() -> Graph:
    return graph_from_edges([(0, 1)], 2)


@pytest.fixture
def k3() -> Graph:
    return graph_from_edges([(0, 1), (1, 2), (0, 2)], 3)


@pytest.fixture
def path3() -> Graph:
    return graph_from_edges([(0, 1), (1, 2)], 3)


@pytest.fixture
def star() -> Graph:
    """K_{1,3} with center 0."""
    return graph_from_edges([(0, 1), (0, 2), (0, 3)], 4)


@pytest.fixture
def single_node() -> Graph:
    return Graph(1, ((),))


@pytest.fixture
def write_dataset(tmp_path: pathlib.Path) -> DatasetWriter:
    """Write graphs.json and optional target.csv / features.json into a fresh directory."""

    def write(
        graphs: Mapping[str, Sequence[Sequence[int]]],
        targets: Mapping[str, int] | None = None,
        features: Mapping[str, Sequence[Sequence[float]]] | None = None,
        name: str = "dataset",
    ) -> pathlib.Path:
        directory = tmp_path / name
        directory.mkdir()
        (directory / "graphs.json").write_text(json.dumps(graphs), encoding="utf-8")
        if targets is not None:
            rows = "".join(f"{graph_id},{label}\n" for graph_id, label in targets.items())
            (directory / "target.csv").write_text("id,target\n" + rows, encoding="utf-8")
        if features is not None:
            (directory / "features.json").write_text(json.dumps(features), encoding="utf-8")
        return directory

    return write


@pytest.fixture
def toy_dataset(write_dataset: DatasetWriter) -> pathlib.Path:
    """Twenty labeled graphs: stars (label 1) and paths (label 0) of growing size."""
    graphs: dict[str, list[list[int]]] = {}
    targets: dict[str, int] = {}
    for index in range(20):
        n = 4 + index // 2
        if index % 2:
            graphs[str(index)] = [[0, v] for v in range(1, n)]
            targets[str(index)] = 1
        else:
            graphs[str(index)] = [[v, v + 1] for v in range(n - 1)]
            targets[str(index)] = 0
    return write_dataset(graphs, targets)


@pytest.fixture
def datasets_root() -> pathlib.Path:
    root = os.environ.get("WAVECHAR_DATASETS")
    if not root:
        pytest.skip("WAVECHAR_DATASETS is not set")
    return pathlib.Path(root)

# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

import csv
import json
import pathlib
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from wavechar.constants.paths import DatasetFiles
from wavechar.errors import InputError
from wavechar.graph import AttributeMatrix, Graph, from_edge_list, structural_features
from wavechar.utils import console


@dataclass(frozen=True, eq=False)
class GraphCollection:
    """Graphs in file order, with optional binary labels and node features keyed by graph id."""

    ids: tuple[str, ...]
    graphs: tuple[Graph, ...]
    labels: Mapping[str, int] | None = None
    attributes: Mapping[str, AttributeMatrix] | None = None
    _positions: dict[str, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if len(self.ids) != len(self.graphs):
            raise InputError(f"got {len(self.ids)} ids for {len(self.graphs)} graphs")
        positions = {graph_id: index for index, graph_id in enumerate(self.ids)}
        if len(positions) != len(self.ids):
            raise InputError("graph ids are not unique")
        object.__setattr__(self, "_positions", positions)

        if self.labels is not None:
            for graph_id, label in self.labels.items():
                if graph_id not in positions:
                    raise InputError(f"label given for unknown graph {graph_id!r}")
                if label not in (0, 1):
                    raise InputError(f"label of graph {graph_id!r} must be 0 or 1, got {label!r}")

        if self.attributes is not None:
            if set(self.attributes) != set(positions):
                raise InputError("node features must be given for every graph or for none")
            dimensions = {attrs.dimension for attrs in self.attributes.values()}
            if len(dimensions) > 1:
                raise InputError(f"node feature counts differ across graphs: {sorted(dimensions)}")
            for graph_id, attrs in self.attributes.items():
                n = self.graphs[positions[graph_id]].num_nodes
                if attrs.num_nodes != n:
                    raise InputError(f"graph {graph_id!r}: {attrs.num_nodes} feature rows for {n} nodes")

    def __len__(self) -> int:
        return len(self.ids)

    def graph(self, graph_id: str) -> Graph:
        if graph_id not in self._positions:
            raise InputError(f"unknown graph {graph_id!r}")
        return self.graphs[self._positions[graph_id]]

    def attributes_for(self, graph_id: str) -> AttributeMatrix:
        """Supplied node features, or the structural features of the graph when none were supplied."""
        if self.attributes is not None:
            return self.attributes[graph_id]
        return structural_features(self.graph(graph_id))

    def items(self) -> list[tuple[Graph, AttributeMatrix | None]]:
        """Graphs paired with their supplied features; ``None`` defers structural features to embed time."""
        if self.attributes is None:
            return [(g, None) for g in self.graphs]
        return [(g, self.attributes[graph_id]) for graph_id, g in zip(self.ids, self.graphs, strict=True)]

    def label_vector(self, ids: Sequence[str]) -> NDArray[np.int64]:
        if self.labels is None:
            raise InputError("the dataset has no labels")
        missing = [graph_id for graph_id in ids if graph_id not in self.labels]
        if missing:
            raise InputError(f"graph {missing[0]!r} has no label ({len(missing)} unlabeled in total)")
        return np.array([self.labels[graph_id] for graph_id in ids], dtype=np.int64)


def _read_json(path: pathlib.Path) -> object:
    try:
        with path.open("r", encoding="utf-8") as f:
            data: object = json.load(f)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: malformed JSON at line {e.lineno}: {e.msg}") from e
    except OSError as e:
        raise InputError(f"{path}: cannot read file: {e}") from e
    return data


def _is_node_id(value: object) -> bool:
    return isinstance(value, int) and not isinstance(value, bool) and value >= 0


def _parse_edges(path: pathlib.Path, graph_id: str, raw: object) -> list[tuple[int, int]]:
    if not isinstance(raw, list):
        raise InputError(f"{path}: graph {graph_id!r} is not a list of edges")
    edges: list[tuple[int, int]] = []
    for position, pair in enumerate(raw):
        if not (isinstance(pair, list) and len(pair) == 2 and all(_is_node_id(x) for x in pair)):
            raise InputError(f"{path}: graph {graph_id!r}, edge {position}: expected a pair of node ids, got {pair!r}")
        edges.append((pair[0], pair[1]))
    return edges


def _read_features(path: pathlib.Path) -> dict[str, AttributeMatrix]:
    data = _read_json(path)
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object mapping graph ids to feature rows")

    features: dict[str, AttributeMatrix] = {}
    for graph_id, rows in data.items():
        if not isinstance(rows, list) or not rows:
            raise InputError(f"{path}: graph {graph_id!r} has no feature rows")
        try:
            features[graph_id] = AttributeMatrix.from_rows(rows)
        except (TypeError, ValueError) as e:
            raise InputError(f"{path}: graph {graph_id!r}: feature rows are not a numeric matrix") from e
        except InputError as e:
            raise InputError(f"{path}: graph {graph_id!r}: {e}") from e
    return features


def read_targets(path: pathlib.Path, known: Mapping[str, int] | None = None) -> dict[str, int]:
    """Binary labels from an ``id,target`` CSV; ids outside ``known`` are rejected when it is given."""
    labels: dict[str, int] = {}
    try:
        with path.open("r", encoding="utf-8", newline="") as f:
            reader = csv.reader(f)
            header = next(reader, None)
            if header is None or [cell.strip() for cell in header[:2]] != ["id", "target"]:
                raise InputError(f"{path}:1: expected the header 'id,target'")
            for row in reader:
                if not row:
                    continue
                if len(row) < 2:
                    raise InputError(f"{path}:{reader.line_num}: expected 'id,target', got {','.join(row)!r}")
                graph_id, target = row[0].strip(), row[1].strip()
                if known is not None and graph_id not in known:
                    raise InputError(f"{path}:{reader.line_num}: graph {graph_id!r} is not in the dataset")
                if target not in ("0", "1"):
                    raise InputError(f"{path}:{reader.line_num}: target must be 0 or 1, got {target!r}")
                if graph_id in labels:
                    raise InputError(f"{path}:{reader.line_num}: graph {graph_id!r} is labeled twice")
                labels[graph_id] = int(target)
    except csv.Error as e:
        raise InputError(f"{path}: malformed CSV: {e}") from e
    except OSError as e:
        raise InputError(f"{path}: cannot read file: {e}") from e
    return labels


def load_dataset(path: pathlib.Path) -> GraphCollection:
    """Read ``graphs.json`` and, when present, ``target.csv`` and ``features.json`` from ``path``.

    Node count is ``1 + max node id`` over the edges, extended to the number
    of feature rows when features are supplied. Self-loops and repeated edges
    are dropped with a warning.
    """
    if not path.is_dir():
        raise InputError(f"{path}: dataset directory does not exist")
    graphs_path = path / DatasetFiles.graphs
    if not graphs_path.is_file():
        raise InputError(f"{graphs_path}: required dataset file is missing")

    data = _read_json(graphs_path)
    if not isinstance(data, dict) or not data:
        raise InputError(f"{graphs_path}: expected a non-empty JSON object mapping graph ids to edge lists")

    features_path = path / DatasetFiles.features
    features = _read_features(features_path) if features_path.is_file() else None
    if features is not None:
        unknown = sorted(set(features) - set(data))
        if unknown:
            raise InputError(f"{features_path}: features given for unknown graph {unknown[0]!r}")

    ids: list[str] = []
    graphs: list[Graph] = []
    dropped = 0
    for graph_id, raw in data.items():
        edges = _parse_edges(graphs_path, graph_id, raw)
        num_nodes = 1 + max((max(u, v) for u, v in edges), default=-1)
        if features is not None and graph_id in features:
            rows = features[graph_id].num_nodes
            if rows < num_nodes:
                raise InputError(f"{features_path}: graph {graph_id!r} has {rows} feature rows but {num_nodes} nodes")
            num_nodes = rows
        build = from_edge_list(edges, num_nodes)
        dropped += build.dropped
        ids.append(graph_id)
        graphs.append(build.graph)

    if dropped:
        console.warning(f"{graphs_path}: dropped {dropped} self-loops or repeated edges")

    positions = {graph_id: index for index, graph_id in enumerate(ids)}
    target_path = path / DatasetFiles.target
    labels = read_targets(target_path, positions) if target_path.is_file() else None

    try:
        return GraphCollection(tuple(ids), tuple(graphs), labels, features)
    except InputError as e:
        raise InputError(f"{path}: {e}") from e

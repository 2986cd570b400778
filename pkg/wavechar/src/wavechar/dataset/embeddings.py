# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

import csv
import math
import pathlib
from collections.abc import Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from wavechar.errors import InputError


def _format(value: float) -> str:
    # 17 significant digits round-trip every float64
    return format(value, ".17g")


def write_embeddings(path: pathlib.Path, ids: Sequence[str], matrix: ArrayLike) -> None:
    values = np.asarray(matrix, dtype=np.float64)
    if values.ndim != 2:
        raise InputError(f"embedding matrix must be 2-d, got shape {values.shape}")
    if values.shape[0] != len(ids):
        raise InputError(f"got {len(ids)} ids for {values.shape[0]} embedding rows")

    header = ["id", *(f"x{j}" for j in range(values.shape[1]))]
    try:
        with path.open("w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(header)
            for graph_id, row in zip(ids, values.tolist(), strict=True):
                writer.writerow([graph_id, *(_format(x) for x in row)])
    except OSError as e:
        raise InputError(f"{path}: cannot write embeddings: {e}") from e


def read_embeddings(path: pathlib.Path) -> tuple[list[str], NDArray[np.float64]]:
    if not path.is_file():
        raise InputError(f"{path}: embedding file does not exist")

    ids: list[str] = []
    rows: list[list[float]] = []
    seen: set[str] = set()
    try:
        with path.open("r", encoding="utf-8", newline="") as f:
            reader = csv.reader(f)
            header = next(reader, None)
            if header is not None:
                header = [cell.strip() for cell in header]
            if header is None or len(header) < 2 or header[0] != "id":
                raise InputError(f"{path}:1: expected the header 'id,x0,x1,...'")
            expected = [f"x{j}" for j in range(len(header) - 1)]
            if header[1:] != expected:
                raise InputError(f"{path}:1: embedding columns must be named x0..x{len(expected) - 1}")

            for row in reader:
                if not row:
                    continue
                line = reader.line_num
                if len(row) != len(header):
                    raise InputError(f"{path}:{line}: expected {len(header)} cells, got {len(row)}")
                graph_id = row[0].strip()
                if graph_id in seen:
                    raise InputError(f"{path}:{line}: graph {graph_id!r} appears twice")
                try:
                    parsed = [float(cell) for cell in row[1:]]
                except ValueError as e:
                    raise InputError(f"{path}:{line}: non-numeric cell: {e}") from e
                if not all(math.isfinite(x) for x in parsed):
                    raise InputError(f"{path}:{line}: non-finite embedding value")
                seen.add(graph_id)
                ids.append(graph_id)
                rows.append(parsed)
    except csv.Error as e:
        raise InputError(f"{path}: malformed CSV: {e}") from e
    except OSError as e:
        raise InputError(f"{path}: cannot read embeddings: {e}") from e

    if not rows:
        raise InputError(f"{path}: no embedding rows after the header")
    return ids, np.array(rows, dtype=np.float64)

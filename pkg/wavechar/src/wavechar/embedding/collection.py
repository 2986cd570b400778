# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from wavechar.errors import InputError, WavecharError
from wavechar.graph import AttributeMatrix, Graph, structural_features
from wavechar.utils import console
from wavechar.utils.parallel import ordered_map

from .embedder import embed_graph
from .params import EmbeddingParams


@dataclass(frozen=True)
class EmbeddingFailure:
    index: int
    graph_id: str
    message: str


@dataclass(frozen=True, eq=False)
class EmbeddingBatch:
    """Row ``r`` of ``matrix`` embeds input graph ``indices[r]``; skipped graphs are listed in ``failures``."""

    matrix: NDArray[np.float64]
    indices: tuple[int, ...]
    failures: tuple[EmbeddingFailure, ...]


_Task = tuple[Graph, AttributeMatrix | None, EmbeddingParams]
_Outcome = tuple[NDArray[np.float64] | None, WavecharError | None]


def _embed_one(task: _Task) -> _Outcome:
    g, attrs, params = task
    try:
        if attrs is None:
            attrs = structural_features(g)
        return embed_graph(g, attrs, params).values, None
    except WavecharError as e:
        return None, e


def embed_collection(
    items: Sequence[tuple[Graph, AttributeMatrix | None]],
    params: EmbeddingParams,
    workers: int = 1,
    skip_bad_graphs: bool = False,
    ids: Sequence[str] | None = None,
    progress: bool = False,
) -> EmbeddingBatch:
    """Embed every graph; rows keep input order whatever ``workers`` is.

    Graphs paired with ``None`` are embedded with their structural features.

    A failing graph aborts the batch with an error naming it, unless
    ``skip_bad_graphs`` is set, in which case it is logged and left out.
    """
    if not items:
        raise InputError("the graph collection is empty")
    if ids is not None and len(ids) != len(items):
        raise InputError(f"got {len(ids)} ids for {len(items)} graphs")
    graph_ids = list(ids) if ids is not None else [str(i) for i in range(len(items))]

    tasks: list[_Task] = [(g, attrs, params) for g, attrs in items]
    reporter = console.ProgressReporter(len(tasks), "Embedded graphs") if progress else None

    rows: list[NDArray[np.float64]] = []
    indices: list[int] = []
    failures: list[EmbeddingFailure] = []
    for index, (values, failure) in enumerate(ordered_map(_embed_one, tasks, workers=workers)):
        if reporter is not None:
            reporter.update(index + 1)

        if failure is not None:
            message = f"graph {graph_ids[index]}: {failure}"
            if not skip_bad_graphs:
                raise type(failure)(message) from failure
            console.warning(f"Skipping {message}")
            failures.append(EmbeddingFailure(index, graph_ids[index], str(failure)))
            continue

        assert values is not None
        if rows and values.size != rows[0].size:
            raise InputError(
                f"graph {graph_ids[index]}: embedding has dimension {values.size}, "
                f"expected {rows[0].size}; feature counts differ across graphs"
            )
        rows.append(values)
        indices.append(index)

    if not rows:
        raise InputError("no graph in the collection could be embedded")

    return EmbeddingBatch(np.vstack(rows), tuple(indices), tuple(failures))

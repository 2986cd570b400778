# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

import pathlib
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from wavechar.dataset import GraphCollection
from wavechar.embedding import EmbeddingParams
from wavechar.errors import InputError
from wavechar.utils import console

from .config import EvalConfig
from .protocol import EvalReport, evaluate_collection


@dataclass(frozen=True)
class SensitivityRow:
    param: str
    value: float
    mean_auc: float
    stderr: float


def sensitivity_sweep(
    collection: GraphCollection,
    base: EmbeddingParams,
    grid: Mapping[str, Sequence[float]],
    config: EvalConfig,
    workers: int = 1,
    skip_bad_graphs: bool = False,
) -> list[SensitivityRow]:
    """Vary one parameter at a time, holding the others at ``base``."""
    if not grid:
        raise InputError("the sensitivity grid is empty")
    for param, values in grid.items():
        if not values:
            raise InputError(f"no values given for {param!r}")

    points = [(param, value, base.with_value(param, value)) for param, values in grid.items() for value in values]
    reports: dict[EmbeddingParams, EvalReport] = {}
    rows: list[SensitivityRow] = []
    for index, (param, value, params) in enumerate(points, start=1):
        if params not in reports:
            console.info(f"Sensitivity point {index}/{len(points)}: {param}={value:g}")
            reports[params] = evaluate_collection(collection, params, config, workers, skip_bad_graphs)
        report = reports[params]
        rows.append(SensitivityRow(param, value, report.mean, report.stderr))
    return rows


def sensitivity_table_csv(rows: Sequence[SensitivityRow]) -> str:
    lines = ["param,value,mean_auc,stderr"]
    lines.extend(f"{r.param},{r.value:.17g},{r.mean_auc:.17g},{r.stderr:.17g}" for r in rows)
    return "\n".join(lines) + "\n"


def write_sensitivity_table(path: pathlib.Path, rows: Sequence[SensitivityRow]) -> None:
    try:
        path.write_text(sensitivity_table_csv(rows), encoding="utf-8")
    except OSError as e:
        raise InputError(f"{path}: cannot write sensitivity table: {e}") from e

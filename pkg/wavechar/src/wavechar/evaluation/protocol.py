# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

from __future__ import annotations

import math
import pathlib
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from wavechar.dataset import GraphCollection
from wavechar.embedding import EmbeddingParams, embed_collection
from wavechar.errors import InputError
from wavechar.utils import console
from wavechar.utils.parallel import ordered_map

from .config import EvalConfig
from .logistic import fit_logistic_regression, predict_scores
from .metrics import auc
from .split import derive_seed, train_test_split


@dataclass(frozen=True)
class EvalReport:
    seeds: tuple[int, ...]
    aucs: tuple[float, ...]
    mean: float
    stderr: float

    @classmethod
    def from_aucs(cls, seeds: tuple[int, ...], aucs: tuple[float, ...]) -> EvalReport:
        if not aucs or len(seeds) != len(aucs):
            raise InputError(f"got {len(aucs)} AUC values for {len(seeds)} seeds")
        values = np.array(aucs, dtype=np.float64)
        # sample standard deviation over seeds
        stderr = float(values.std(ddof=1) / math.sqrt(values.size)) if values.size > 1 else 0.0
        mean = min(max(float(values.mean()), float(values.min())), float(values.max()))
        return cls(seeds, aucs, mean, stderr)

    def summary(self) -> str:
        return f"{self.mean:.3f} ± {self.stderr:.3f}"


def _both_classes(y: NDArray[np.int64]) -> bool:
    return bool(np.any(y == 0) and np.any(y == 1))


def _seed_auc(
    seed: int,
    x: NDArray[np.float64],
    y: NDArray[np.int64],
    config: EvalConfig,
) -> float:
    for attempt in range(config.max_split_retries + 1):
        split = train_test_split(y.size, config.test_ratio, derive_seed(seed, attempt))
        if _both_classes(y[split.train]) and _both_classes(y[split.test]):
            model = fit_logistic_regression(x[split.train], y[split.train], config)
            return auc(predict_scores(model, x[split.test]), y[split.test])
        if attempt < config.max_split_retries:
            console.warning(f"Seed {seed}: split lacks a class, retrying with sub-seed {attempt + 1}")

    raise InputError(
        f"seed {seed}: no split with both classes on each side after {config.max_split_retries} retries"
    )


def evaluate(embeddings: ArrayLike, labels: ArrayLike, config: EvalConfig, workers: int = 1) -> EvalReport:
    """Per seed: split, fit on the train side, score AUC on the test side."""
    x = np.asarray(embeddings, dtype=np.float64)
    y = np.asarray(labels)
    if x.ndim != 2 or x.shape[0] != y.size:
        raise InputError(f"got {y.size} labels for an embedding matrix of shape {x.shape}")
    if not np.all(np.isin(y, (0, 1))):
        raise InputError("labels must be 0 or 1")
    y = y.astype(np.int64)
    if not _both_classes(y):
        raise InputError("evaluation needs both classes among the labels")

    aucs = list(
        ordered_map(
            lambda seed: _seed_auc(seed, x, y, config),
            config.seeds,
            workers=workers,
            processes=False,
        )
    )
    return EvalReport.from_aucs(config.seeds, tuple(aucs))


def evaluate_collection(
    collection: GraphCollection,
    params: EmbeddingParams,
    config: EvalConfig,
    workers: int = 1,
    skip_bad_graphs: bool = False,
    progress: bool = False,
) -> EvalReport:
    """Embed every graph of ``collection`` and evaluate against its labels."""
    if collection.labels is None:
        raise InputError("the dataset has no target.csv; labels are required for evaluation")

    batch = embed_collection(
        collection.items(),
        params,
        workers=workers,
        skip_bad_graphs=skip_bad_graphs,
        ids=collection.ids,
        progress=progress,
    )
    kept = [collection.ids[i] for i in batch.indices]
    return evaluate(batch.matrix, collection.label_vector(kept), config, workers=workers)


def per_seed_csv(report: EvalReport) -> str:
    lines = ["seed,auc"]
    lines.extend(f"{seed},{value:.17g}" for seed, value in zip(report.seeds, report.aucs, strict=True))
    return "\n".join(lines) + "\n"


def write_per_seed(path: pathlib.Path, report: EvalReport) -> None:
    try:
        path.write_text(per_seed_csv(report), encoding="utf-8")
    except OSError as e:
        raise InputError(f"{path}: cannot write per-seed results: {e}") from e

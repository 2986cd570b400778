# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

import numpy as np
from numpy.typing import ArrayLike
from scipy.stats import rankdata

from wavechar.errors import InputError


def auc(scores: ArrayLike, labels: ArrayLike) -> float:
    """Mann-Whitney estimate of ``P(score+ > score-) + P(tie) / 2`` from average ranks."""
    s = np.asarray(scores, dtype=np.float64)
    y = np.asarray(labels)
    if s.ndim != 1 or s.shape != y.shape:
        raise InputError(f"got {s.size} scores for {y.size} labels")
    if not np.all(np.isin(y, (0, 1))):
        raise InputError("labels must be 0 or 1")

    positive = y == 1
    n_pos = int(positive.sum())
    n_neg = int(y.size - n_pos)
    if n_pos == 0 or n_neg == 0:
        raise InputError("AUC needs both classes among the labels")

    ranks = rankdata(s, method="average")
    u = float(ranks[positive].sum()) - n_pos * (n_pos + 1) / 2.0
    return u / (n_pos * n_neg)

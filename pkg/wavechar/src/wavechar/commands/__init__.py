# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

from .config import config
from .embed import embed
from .evaluate import evaluate
from .run import run
from .sensitivity import sensitivity
from .stats import stats

__all__ = [
    "config",
    "embed",
    "evaluate",
    "run",
    "sensitivity",
    "stats",
]

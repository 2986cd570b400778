# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

from .config import EvalConfig
from .logistic import LogisticModel, fit_logistic_regression, predict_scores
from .metrics import auc
from .protocol import EvalReport, evaluate, evaluate_collection, per_seed_csv, write_per_seed
from .sensitivity import SensitivityRow, sensitivity_sweep, sensitivity_table_csv, write_sensitivity_table
from .split import Split, derive_seed, train_test_split

__all__ = [
    "EvalConfig",
    "EvalReport",
    "LogisticModel",
    "SensitivityRow",
    "Split",
    "auc",
    "derive_seed",
    "evaluate",
    "evaluate_collection",
    "fit_logistic_regression",
    "per_seed_csv",
    "predict_scores",
    "sensitivity_sweep",
    "sensitivity_table_csv",
    "train_test_split",
    "write_per_seed",
    "write_sensitivity_table",
]

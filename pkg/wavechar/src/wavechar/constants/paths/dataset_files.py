# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

from dataclasses import dataclass


@dataclass(frozen=True)
class DatasetFiles:
    graphs: str = "graphs.json"
    target: str = "target.csv"
    features: str = "features.json"

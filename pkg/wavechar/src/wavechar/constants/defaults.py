# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

from dataclasses import dataclass


@dataclass(frozen=True)
class Defaults:
    # embedding
    k_max: int = 5
    sample_points: int = 25
    tau: float = 0.5
    t_max: float = 2.5
    variants: tuple[str, ...] = ("similarity", "influence")

    # evaluation
    seeds: tuple[int, ...] = tuple(range(10))
    test_ratio: float = 0.2
    l2_strength: float = 1.0
    max_iterations: int = 100
    tolerance: float = 1e-6
    max_split_retries: int = 5

    # spectral
    reconstruction_tolerance: float = 1e-8

    # runtime
    threads: int = 1

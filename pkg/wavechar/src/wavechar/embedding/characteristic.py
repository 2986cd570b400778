# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from wavechar.errors import InputError
from wavechar.graph import AttributeMatrix, Graph
from wavechar.similarity import TransitionWeights


@dataclass(frozen=True)
class ComplexSample:
    re: float
    im: float

    @property
    def modulus(self) -> float:
        return math.hypot(self.re, self.im)


def sample_points(d: int, t_max: float) -> NDArray[np.float64]:
    """``t_j = j * t_max / d`` for ``j = 1..d``; zero is excluded because every characteristic function is 1 there."""
    if d < 1:
        raise InputError(f"need at least one sampling point, got {d}")
    if not t_max > 0:
        raise InputError(f"t_max must be positive, got {t_max}")
    return np.arange(1, d + 1, dtype=np.float64) * t_max / d


def node_characteristic(weights: TransitionWeights, attrs: AttributeMatrix, p: int, t: float) -> ComplexSample:
    observed = attrs.column(p)[list(weights.support)]
    return ComplexSample(
        re=float(np.dot(weights.weights, np.cos(t * observed))),
        im=float(np.dot(weights.weights, np.sin(t * observed))),
    )


def graph_characteristic(
    g: Graph,
    all_weights: Sequence[TransitionWeights],
    attrs: AttributeMatrix,
    p: int,
    t: float,
) -> ComplexSample:
    if g.num_nodes == 0:
        raise InputError("the characteristic function of an empty graph is undefined")
    if len(all_weights) != g.num_nodes:
        raise InputError(f"expected transition weights for {g.num_nodes} nodes, got {len(all_weights)}")

    samples = [node_characteristic(weights, attrs, p, t) for weights in all_weights]
    return ComplexSample(
        re=sum(s.re for s in samples) / g.num_nodes,
        im=sum(s.im for s in samples) / g.num_nodes,
    )

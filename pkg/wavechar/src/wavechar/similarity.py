# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

from __future__ import annotations

import itertools
import math
import operator
from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum

import numpy as np
from numpy.typing import ArrayLike, NDArray

from wavechar.errors import InputError
from wavechar.graph import Graph, hop_distances, k_hop_neighborhood
from wavechar.spectral import WaveletMatrix

BRUTEFORCE_MAX_LENGTH = 8

# float64 elements gathered per block when comparing node signatures
_PAIR_BLOCK_ELEMENTS = 1 << 22


class Variant(StrEnum):
    """How ``P(v_j | v_i)`` is formed over the k-hop sub-graph of ``v_i``."""

    SIMILARITY = "similarity"
    INFLUENCE = "influence"
    PRODUCT = "product"


@dataclass(frozen=True, eq=False)
class SortedSignature:
    node: int
    values: NDArray[np.float64]

    def __post_init__(self) -> None:
        if np.any(np.diff(self.values) < 0):
            raise InputError(f"signature of node {self.node} is not in ascending order")


@dataclass(frozen=True, eq=False)
class TransitionWeights:
    source: int
    hops: int
    support: tuple[int, ...]
    weights: NDArray[np.float64]

    def as_dict(self) -> dict[int, float]:
        return {v: float(w) for v, w in zip(self.support, self.weights, strict=True)}


def sorted_signature(psi: WaveletMatrix, i: int) -> SortedSignature:
    if not 0 <= i < psi.order:
        raise InputError(f"node {i} is outside 0..{psi.order - 1}")
    return SortedSignature(i, np.sort(psi.column(i)))


def mdpa(x: SortedSignature | ArrayLike, y: SortedSignature | ArrayLike) -> float:
    """Minimum difference of pair assignments between two ascending lists."""
    xs = x.values if isinstance(x, SortedSignature) else np.asarray(x, dtype=np.float64)
    ys = y.values if isinstance(y, SortedSignature) else np.asarray(y, dtype=np.float64)
    if xs.shape != ys.shape:
        raise InputError(f"cannot compare signatures of lengths {xs.size} and {ys.size}")
    return float(np.abs(xs - ys).sum())


def mdpa_bruteforce_oracle(x: Sequence[float], y: Sequence[float]) -> float:
    """Best one-to-one assignment found by trying every permutation of ``y``."""
    if len(x) != len(y):
        raise InputError(f"cannot compare lists of lengths {len(x)} and {len(y)}")
    if len(x) > BRUTEFORCE_MAX_LENGTH:
        raise InputError(f"brute force is limited to {BRUTEFORCE_MAX_LENGTH} elements, got {len(x)}")

    return float(min(sum(map(abs, map(operator.sub, x, assignment))) for assignment in itertools.permutations(y)))


def topological_similarity(psi: WaveletMatrix, i: int, j: int) -> float:
    return math.exp(-mdpa(sorted_signature(psi, i), sorted_signature(psi, j)))


def _normalized(source: int, k: int, support: tuple[int, ...], raw: NDArray[np.float64]) -> TransitionWeights:
    return TransitionWeights(source, k, support, raw / raw.sum())


def similarity_transition(g: Graph, psi: WaveletMatrix, v: int, k: int) -> TransitionWeights:
    support = k_hop_neighborhood(g, v, k)
    raw = np.array([topological_similarity(psi, v, u) for u in support])
    return _normalized(v, k, support, raw)


def influence_transition(g: Graph, v: int, k: int) -> TransitionWeights:
    support = k_hop_neighborhood(g, v, k)
    raw = 1.0 + g.degrees[list(support)].astype(np.float64)
    return _normalized(v, k, support, raw)


def product_transition(g: Graph, psi: WaveletMatrix, v: int, k: int) -> TransitionWeights:
    support = k_hop_neighborhood(g, v, k)
    similarity = np.array([topological_similarity(psi, v, u) for u in support])
    raw = similarity * (1.0 + g.degrees[list(support)].astype(np.float64))
    return _normalized(v, k, support, raw)


@dataclass(frozen=True, eq=False)
class SimilarityTable:
    """Hop distances and topological similarities of one graph, for every pair within ``max_hops``.

    ``similarity[i, j]`` is zero for pairs farther apart than ``max_hops``; those
    pairs never enter a transition.
    """

    max_hops: int
    hops: NDArray[np.int64]
    similarity: NDArray[np.float64]
    smoothed_degrees: NDArray[np.float64]

    @classmethod
    def build(cls, g: Graph, psi: WaveletMatrix, max_hops: int) -> SimilarityTable:
        hops = hop_distances(g, max_hops)
        n = g.num_nodes
        signatures = np.sort(psi.values, axis=0).T

        rows, cols = np.nonzero(np.triu(hops <= max_hops, k=1))
        distances = np.empty(rows.size, dtype=np.float64)
        block = max(1, _PAIR_BLOCK_ELEMENTS // max(n, 1))
        for start in range(0, rows.size, block):
            stop = start + block
            gap = signatures[rows[start:stop]] - signatures[cols[start:stop]]
            distances[start:stop] = np.abs(gap).sum(axis=1)

        similarity = np.eye(n, dtype=np.float64)
        values = np.exp(-distances)
        similarity[rows, cols] = values
        similarity[cols, rows] = values
        return cls(max_hops, hops, similarity, 1.0 + g.degrees.astype(np.float64))

    def transition_matrix(self, k: int, variant: Variant) -> NDArray[np.float64]:
        """Row ``i`` holds ``P(v_j | v_i)`` over all ``j``; zero outside ``G_k(v_i)``."""
        if not 1 <= k <= self.max_hops:
            raise InputError(f"hop count {k} is outside 1..{self.max_hops}")

        inside = self.hops <= k
        if variant is Variant.SIMILARITY:
            raw = np.where(inside, self.similarity, 0.0)
        elif variant is Variant.INFLUENCE:
            raw = np.where(inside, self.smoothed_degrees[np.newaxis, :], 0.0)
        else:
            raw = np.where(inside, self.similarity * self.smoothed_degrees[np.newaxis, :], 0.0)
        return raw / raw.sum(axis=1, keepdims=True)

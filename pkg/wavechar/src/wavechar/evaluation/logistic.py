# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.optimize import minimize
from scipy.special import expit

from wavechar.errors import InputError, NumericError

from .config import EvalConfig


@dataclass(frozen=True, eq=False)
class LogisticModel:
    weights: NDArray[np.float64]
    intercept: float
    # of the summed objective over standardized features at the returned point
    gradient_norm: float
    iterations: int

    def decision_function(self, x: ArrayLike) -> NDArray[np.float64]:
        features = np.asarray(x, dtype=np.float64)
        if features.ndim != 2 or features.shape[1] != self.weights.size:
            raise InputError(f"model expects {self.weights.size} features, got shape {features.shape}")
        return features @ self.weights + self.intercept


class _Objective:
    """``C * sum logloss + |w|^2 / 2`` over standardized features; the intercept is unpenalized."""

    def __init__(self, z: NDArray[np.float64], y: NDArray[np.float64], c: float):
        self.z = z
        self.y = y
        self.c = c

    def _split(self, theta: NDArray[np.float64]) -> tuple[NDArray[np.float64], float, NDArray[np.float64]]:
        w, b = theta[:-1], float(theta[-1])
        return w, b, self.z @ w + b

    def value_and_gradient(self, theta: NDArray[np.float64]) -> tuple[float, NDArray[np.float64]]:
        w, _, linear = self._split(theta)
        loss = self.c * float(np.sum(np.logaddexp(0.0, linear) - self.y * linear)) + float(w @ w) / 2.0
        residual = expit(linear) - self.y
        gradient = np.empty_like(theta)
        gradient[:-1] = self.c * (self.z.T @ residual) + w
        gradient[-1] = self.c * float(residual.sum())
        return loss, gradient

    def hessian(self, theta: NDArray[np.float64]) -> NDArray[np.float64]:
        _, _, linear = self._split(theta)
        p = expit(linear)
        s = p * (1.0 - p)
        dim = theta.size
        h = np.empty((dim, dim), dtype=np.float64)
        h[:-1, :-1] = self.c * (self.z.T * s) @ self.z + np.eye(dim - 1)
        h[:-1, -1] = self.c * (self.z.T @ s)
        h[-1, :-1] = h[:-1, -1]
        h[-1, -1] = self.c * float(s.sum())
        return h


_POLISH_STEPS = 5


def _newton_polish(
    objective: _Objective, theta: NDArray[np.float64], tolerance: float
) -> tuple[NDArray[np.float64], float]:
    """Plain Newton steps from a near-optimal point until the gradient norm is within ``tolerance``.

    The trust region stops once predicted decreases drop below the resolution of
    the summed loss, which for large samples happens before the gradient is small.
    """
    _, gradient = objective.value_and_gradient(theta)
    for _ in range(_POLISH_STEPS):
        gradient_norm = float(np.linalg.norm(gradient))
        if gradient_norm <= tolerance or not np.isfinite(gradient_norm):
            break
        try:
            step = np.linalg.solve(objective.hessian(theta), gradient)
        except np.linalg.LinAlgError:
            break
        theta = theta - step
        _, gradient = objective.value_and_gradient(theta)
    return theta, float(np.linalg.norm(gradient))


def fit_logistic_regression(x: ArrayLike, y: ArrayLike, config: EvalConfig) -> LogisticModel:
    """L2-regularized logistic regression fitted by a trust-region Newton method.

    Features are standardized by their mean and standard deviation (zero
    deviation counts as one); the returned weights apply to the raw features.
    """
    features = np.asarray(x, dtype=np.float64)
    labels = np.asarray(y)
    if features.ndim != 2 or features.shape[0] != labels.size:
        raise InputError(f"got {labels.size} labels for a feature matrix of shape {features.shape}")
    if not np.all(np.isfinite(features)):
        raise InputError("features contain non-finite entries")
    if not np.all(np.isin(labels, (0, 1))):
        raise InputError("labels must be 0 or 1")
    if np.unique(labels).size < 2:
        raise InputError("logistic regression needs examples of both classes")

    mean = features.mean(axis=0)
    scale = features.std(axis=0)
    scale[scale == 0.0] = 1.0
    objective = _Objective((features - mean) / scale, labels.astype(np.float64), config.l2_strength)

    result = minimize(
        objective.value_and_gradient,
        np.zeros(features.shape[1] + 1),
        jac=True,
        hess=objective.hessian,
        method="trust-exact",
        options={"gtol": config.tolerance, "maxiter": config.max_iterations},
    )
    theta, gradient_norm = _newton_polish(objective, result.x, config.tolerance)
    if not np.isfinite(gradient_norm) or gradient_norm > config.tolerance:
        raise NumericError(
            f"logistic regression did not converge after {result.nit} iterations: "
            f"gradient norm {gradient_norm:.3e} exceeds {config.tolerance:.1e}"
        )

    weights = theta[:-1] / scale
    intercept = float(theta[-1] - mean @ weights)
    return LogisticModel(weights, intercept, gradient_norm, int(result.nit))


def predict_scores(model: LogisticModel, x: ArrayLike) -> NDArray[np.float64]:
    return expit(model.decision_function(x))

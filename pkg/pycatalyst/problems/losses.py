"""
Smooth losses over linear predictions a_i^T x, with an optional ridge term folded
into every component: f_i(x) = loss(b_i, a_i^T x) + (ridge/2) ||x||^2.
"""
from enum import Enum

import numpy as np
from scipy import linalg
from scipy.special import expit

from pycatalyst.core import SmoothOracle, as_vector
from pycatalyst.exceptions import InputError


class LossKind(Enum):
    LOGISTIC = "LOGISTIC"
    SQUARED_ERROR = "SQUARED_ERROR"

    @staticmethod
    def from_value(string):
        """
        resolve a loss kind from its case-insensitive name, e.g. "logistic" or "squared_error"
        """
        try:
            return LossKind(string.upper())
        except (ValueError, AttributeError):
            return None


# smoothness of the loss in its margin, per unit-norm row
LOGISTIC_SMOOTHNESS = 0.25
SQUARED_ERROR_SMOOTHNESS = 1.0


def check_binary_labels(labels):
    labels = np.asarray(labels)
    bad = np.flatnonzero((labels != 1.0) & (labels != -1.0))
    if bad.size > 0:
        raise InputError(
            f"logistic loss requires labels in {{-1, +1}}, got {labels[bad[0]]} at row {bad[0]}"
        )


def logistic_loss(margins):
    """
    log(1 + exp(-u)) evaluated as max(-u, 0) + log1p(exp(-|u|)).
    """
    return np.maximum(-margins, 0.0) + np.log1p(np.exp(-np.abs(margins)))


def logistic_derivative(margins):
    """
    d/du log(1 + exp(-u)) = -sigmoid(-u)
    """
    return -expit(-margins)


def _value_grad(data, x, i, loss, derivative):
    x = as_vector(x, data.p)
    features, labels = data.features, data.labels

    if i is None:
        margins = labels * (features @ x)
        value = float(np.mean(loss(margins)))
        grad = features.T @ (labels * derivative(margins)) / data.n
        return value, np.asarray(grad).ravel()

    if not 0 <= i < data.n:
        raise InputError(f"component index {i} out of range [0, {data.n})")
    row = data.row(i)
    margin = labels[i] * row.dot(x)
    grad = np.zeros(data.p)
    grad[row.indices] = labels[i] * derivative(margin) * row.values
    return float(loss(margin)), grad


def logistic_value_grad(data, x, i=None):
    """
    Value and gradient of log(1 + exp(-b_i a_i^T x)) for component i,
    or of the mean over all components when i is None.
    """
    check_binary_labels(data.labels)
    return _value_grad(data, x, i, logistic_loss, logistic_derivative)


def squared_error_value_grad(data, x, i=None):
    """
    Value and gradient of (1/2)(b_i - a_i^T x)^2, or of its mean when i is None.
    Here the "margin" is the prediction a_i^T x and labels enter through the residual.
    """
    x = as_vector(x, data.p)
    features, labels = data.features, data.labels

    if i is None:
        residuals = labels - features @ x
        value = 0.5 * float(np.mean(residuals ** 2))
        grad = -(features.T @ residuals) / data.n
        return value, np.asarray(grad).ravel()

    if not 0 <= i < data.n:
        raise InputError(f"component index {i} out of range [0, {data.n})")
    row = data.row(i)
    residual = labels[i] - row.dot(x)
    grad = np.zeros(data.p)
    grad[row.indices] = -residual * row.values
    return 0.5 * residual ** 2, grad


class LinearModelOracle(SmoothOracle):
    """
    Finite-sum oracle for a loss of the linear prediction a_i^T x.

    Component gradients touch only the nnz(a_i) coordinates of the row plus the ridge term.
    Smoothness constants are the per-row bounds loss_smoothness * ||a_i||^2 + ridge.
    """

    def __init__(self, data, loss_kind, ridge=0.0):
        if data.n == 0:
            raise InputError("empty dataset")
        if ridge < 0:
            raise InputError(f"ridge must be non-negative, got {ridge}")

        self.data = data
        self.loss_kind = loss_kind
        self.ridge = float(ridge)

        if loss_kind == LossKind.LOGISTIC:
            check_binary_labels(data.labels)
            loss_smoothness = LOGISTIC_SMOOTHNESS
        elif loss_kind == LossKind.SQUARED_ERROR:
            loss_smoothness = SQUARED_ERROR_SMOOTHNESS
        else:
            raise InputError(f"unknown loss kind {loss_kind}")

        norms = data.row_norms_squared()
        self.n = data.n
        self.p = data.p
        self.L_bar_max = loss_smoothness * float(np.max(norms)) + self.ridge
        self.L_bar_avg = loss_smoothness * float(np.mean(norms)) + self.ridge
        self.L = self.L_bar_max
        self.mu = self.ridge

        self._indptr = data.features.indptr
        self._indices = data.features.indices
        self._values = data.features.data

    def _predictions(self, i, x):
        if i is None:
            return self.data.features @ x
        start, end = self._indptr[i], self._indptr[i + 1]
        return float(np.dot(self._values[start:end], x[self._indices[start:end]]))

    def _losses(self, i, x):
        labels = self.data.labels if i is None else self.data.labels[i]
        predictions = self._predictions(i, x)
        if self.loss_kind == LossKind.LOGISTIC:
            return logistic_loss(labels * predictions)
        return 0.5 * (labels - predictions) ** 2

    def _derivatives(self, i, x):
        """
        d loss / d prediction for component i (or every component when i is None)
        """
        labels = self.data.labels if i is None else self.data.labels[i]
        predictions = self._predictions(i, x)
        if self.loss_kind == LossKind.LOGISTIC:
            return labels * logistic_derivative(labels * predictions)
        return predictions - labels

    def value(self, x):
        return float(np.mean(self._losses(None, x))) + 0.5 * self.ridge * float(np.dot(x, x))

    def full_gradient(self, x):
        grad = self.data.features.T @ self._derivatives(None, x) / self.n
        return np.asarray(grad).ravel() + self.ridge * x

    def component_value(self, i, x):
        return float(self._losses(i, x)) + 0.5 * self.ridge * float(np.dot(x, x))

    def component_gradient(self, i, x):
        start, end = self._indptr[i], self._indptr[i + 1]
        grad = self.ridge * x
        grad[self._indices[start:end]] += self._derivatives(i, x) * self._values[start:end]
        return grad

    def __repr__(self):
        return f"LinearModelOracle({self.loss_kind.name}, ridge={self.ridge}, n={self.n}, p={self.p})"


class QuadraticOracle(SmoothOracle):
    """
    f_0(x) = (1/2) x^T Q x - b^T x as a single-component oracle (n = 1).
    """

    def __init__(self, Q, b):
        Q = np.atleast_2d(np.asarray(Q, dtype=np.float64))
        b = as_vector(b, Q.shape[0], name="b")
        if Q.shape[0] != Q.shape[1] or not np.allclose(Q, Q.T):
            raise InputError("Q must be a symmetric matrix")

        eigenvalues = linalg.eigvalsh(Q)
        tolerance = 1e-10 * max(1.0, float(np.max(np.abs(eigenvalues))))
        if eigenvalues[0] < -tolerance:
            raise InputError(f"Q must be positive semi-definite, smallest eigenvalue {eigenvalues[0]}")

        self.Q = Q
        self.b = b
        self.n = 1
        self.p = Q.shape[0]
        self.L = float(max(eigenvalues[-1], 0.0))
        self.mu = float(min(max(eigenvalues[0], 0.0), self.L))
        self.L_bar_max = self.L
        self.L_bar_avg = self.L

    def value(self, x):
        return 0.5 * float(x @ self.Q @ x) - float(self.b @ x)

    def full_gradient(self, x):
        return self.Q @ x - self.b

    def component_value(self, i, x):
        return self.value(x)

    def component_gradient(self, i, x):
        return self.full_gradient(x)

    def __repr__(self):
        return f"QuadraticOracle(p={self.p}, L={self.L:.6g}, mu={self.mu:.6g})"

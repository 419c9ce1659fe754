"""
Domain types and oracle contracts shared by every solver.

Parameter vectors are plain 1-d float64 numpy arrays. Data rows are stored once,
in a CSR matrix owned by the Dataset; SparseRow is the per-row view of it.
"""
from abc import ABC, abstractmethod
import logging

import numpy as np
from scipy import sparse

from pycatalyst.exceptions import InputError

logger = logging.getLogger(__name__)


def as_vector(x, p=None, name="x"):
    """
    Coerce x to a finite 1-d float64 array, checking its dimension against p when given.
    """
    vector = np.asarray(x, dtype=np.float64)
    if vector.ndim == 0:
        vector = vector.reshape(1)
    if vector.ndim != 1:
        raise InputError(f"{name} must be one-dimensional, got shape {vector.shape}")
    if p is not None and vector.shape[0] != p:
        raise InputError(f"{name} has dimension {vector.shape[0]}, expected {p}")
    if not np.all(np.isfinite(vector)):
        raise InputError(f"{name} contains non-finite entries")
    return vector


class SparseRow:
    def __init__(self, indices, values, dim):
        indices = np.asarray(indices, dtype=np.int64)
        values = np.asarray(values, dtype=np.float64)

        if indices.shape != values.shape:
            raise InputError("indices and values must have the same length")
        if indices.size > 0:
            if np.any(np.diff(indices) <= 0):
                raise InputError("indices must be strictly increasing")
            if indices[0] < 0 or indices[-1] >= dim:
                raise InputError(f"indices must lie in [0, {dim})")

        self.indices = indices
        self.values = values
        self.dim = int(dim)

    @property
    def nnz(self):
        return self.indices.size

    def to_dense(self):
        dense = np.zeros(self.dim)
        dense[self.indices] = self.values
        return dense

    def dot(self, x):
        return float(np.dot(self.values, x[self.indices]))

    def __eq__(self, other):
        return (
            self.dim == other.dim
            and np.array_equal(self.indices, other.indices)
            and np.array_equal(self.values, other.values)
        )

    def __repr__(self):
        return f"SparseRow(indices={self.indices.tolist()}, values={self.values.tolist()}, dim={self.dim})"


class Dataset:
    """
    A training set of n sparse rows a_i with labels b_i, stored as a CSR matrix.
    Arrays are marked read-only so a dataset can be shared between runs.
    """

    def __init__(self, features, labels):
        features = sparse.csr_matrix(features, dtype=np.float64, copy=True)
        features.sort_indices()
        labels = np.asarray(labels, dtype=np.float64).ravel()

        if features.shape[0] != labels.shape[0]:
            raise InputError(
                f"{features.shape[0]} rows but {labels.shape[0]} labels"
            )

        for array in (features.data, features.indices, features.indptr, labels):
            array.setflags(write=False)

        self.features = features
        self.labels = labels

    @classmethod
    def from_rows(cls, rows, labels, p=None):
        rows = list(rows)
        if p is None:
            p = max((row.dim for row in rows), default=0)
        for row in rows:
            if row.dim != p:
                raise InputError(f"row of dimension {row.dim} in a dataset of dimension {p}")

        indptr = np.zeros(len(rows) + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([row.nnz for row in rows])
        indices = np.concatenate([row.indices for row in rows]) if rows else np.zeros(0, dtype=np.int64)
        values = np.concatenate([row.values for row in rows]) if rows else np.zeros(0)
        features = sparse.csr_matrix((values, indices, indptr), shape=(len(rows), p))
        return cls(features, labels)

    @property
    def n(self):
        return self.features.shape[0]

    @property
    def p(self):
        return self.features.shape[1]

    def row(self, i):
        start, end = self.features.indptr[i], self.features.indptr[i + 1]
        return SparseRow(
            self.features.indices[start:end], self.features.data[start:end], self.p
        )

    @property
    def rows(self):
        return [self.row(i) for i in range(self.n)]

    def row_norms_squared(self):
        return np.asarray(self.features.multiply(self.features).sum(axis=1)).ravel()

    def __eq__(self, other):
        return (
            self.features.shape == other.features.shape
            and np.array_equal(self.labels, other.labels)
            and (self.features != other.features).nnz == 0
        )

    def __repr__(self):
        return f"Dataset(n={self.n}, p={self.p}, nnz={self.features.nnz})"


class SmoothOracle(ABC):
    """
    The smooth finite-sum part f_0(x) = (1/n) sum_i f_i(x).

    Implementations expose the global smoothness constant L, the maximum and average
    component smoothness constants, and a known strong-convexity lower bound mu.
    Solvers pick whichever L_bar they need; none is canonical.
    """

    n = None
    p = None
    L = None
    L_bar_max = None
    L_bar_avg = None
    mu = 0.0

    @abstractmethod
    def value(self, x):
        pass

    @abstractmethod
    def full_gradient(self, x):
        pass

    @abstractmethod
    def component_value(self, i, x):
        pass

    @abstractmethod
    def component_gradient(self, i, x):
        pass


class ProxRegularizer(ABC):
    mu = 0.0

    @abstractmethod
    def value(self, x):
        pass

    @abstractmethod
    def prox(self, x, step):
        """
        argmin_z psi(z) + (1 / 2 step) ||x - z||^2
        """
        pass


class CompositeObjective:
    """
    f = f_0 + psi, with mu_total the strong convexity of the sum.
    """

    def __init__(self, smooth, reg):
        if smooth.L < smooth.mu or smooth.mu < 0:
            raise InputError(f"smoothness constants out of order: L={smooth.L}, mu={smooth.mu}")
        self.smooth = smooth
        self.reg = reg

    @property
    def mu_total(self):
        return self.smooth.mu + self.reg.mu

    @property
    def n(self):
        return self.smooth.n

    @property
    def p(self):
        return self.smooth.p

    @property
    def L(self):
        return self.smooth.L

    def value(self, x):
        return self.smooth.value(x) + self.reg.value(x)

    def __repr__(self):
        return (
            f"CompositeObjective({type(self.smooth).__name__} + {type(self.reg).__name__}, "
            f"n={self.n}, p={self.p}, L={self.L:.6g}, mu={self.mu_total:.6g})"
        )


class EvalCounter:
    """
    Tally of gradient and prox evaluations for one run.

    component_grads counts gradients computed with random data access and is the primary cost axis.
    full_passes counts sequential full-gradient computations; with count_full_passes enabled each
    of them also adds n to the effective gradient count.
    """

    def __init__(self, count_full_passes=True):
        self.component_grads = 0
        self.full_passes = 0
        self.prox_calls = 0
        self.count_full_passes = count_full_passes

    def add_component(self, count=1):
        self.component_grads += count

    def add_full_pass(self):
        self.full_passes += 1

    def add_prox(self):
        self.prox_calls += 1

    def effective_grads(self, n):
        if self.count_full_passes:
            return self.component_grads + n * self.full_passes
        return self.component_grads

    def snapshot(self):
        return (self.component_grads, self.full_passes, self.prox_calls)

    def __repr__(self):
        return (
            f"EvalCounter(component_grads={self.component_grads}, "
            f"full_passes={self.full_passes}, prox_calls={self.prox_calls})"
        )


def eval_value(obj, x):
    """
    f_0(x) + psi(x). Function values are never counted.
    """
    x = as_vector(x, obj.p)
    return obj.value(x)


def eval_grad_full(obj, x, counter):
    x = as_vector(x, obj.p)
    counter.add_full_pass()
    return obj.smooth.full_gradient(x)


def eval_grad_component(obj, i, x, counter):
    if not 0 <= i < obj.n:
        raise InputError(f"component index {i} out of range [0, {obj.n})")
    counter.add_component()
    return obj.smooth.component_gradient(i, x)


def eval_prox(obj, v, step, counter):
    if counter is not None:
        counter.add_prox()
    return obj.reg.prox(v, step)

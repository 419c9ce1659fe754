import numpy as np

from pycatalyst.core import ProxRegularizer
from pycatalyst.exceptions import InputError


def _check_non_negative(**values):
    for name, value in values.items():
        if value < 0:
            raise InputError(f"{name} must be non-negative, got {value}")


def prox_l1(v, t):
    """
    Componentwise soft-threshold sign(v_j) * max(|v_j| - t, 0).
    """
    _check_non_negative(t=t)
    v = np.asarray(v, dtype=np.float64)
    return np.sign(v) * np.maximum(np.abs(v) - t, 0.0)


def prox_elastic_net(v, t, lam, mu):
    """
    prox of t * (lam ||.||_1 + (mu/2) ||.||^2): soft-threshold at t*lam, then shrink by 1 + t*mu.
    """
    _check_non_negative(t=t, lam=lam, mu=mu)
    return prox_l1(v, t * lam) / (1.0 + t * mu)


class ZeroRegularizer(ProxRegularizer):
    mu = 0.0

    def value(self, x):
        return 0.0

    def prox(self, x, step):
        _check_non_negative(step=step)
        return np.array(x, dtype=np.float64)

    def __repr__(self):
        return "ZeroRegularizer()"


class L1Regularizer(ProxRegularizer):
    mu = 0.0

    def __init__(self, lam):
        _check_non_negative(lam=lam)
        self.lam = float(lam)

    def value(self, x):
        return self.lam * float(np.sum(np.abs(x)))

    def prox(self, x, step):
        return prox_l1(x, step * self.lam)

    def __repr__(self):
        return f"L1Regularizer(lam={self.lam})"


class ElasticNetRegularizer(ProxRegularizer):
    def __init__(self, lam, mu):
        _check_non_negative(lam=lam, mu=mu)
        self.lam = float(lam)
        self.mu = float(mu)

    def value(self, x):
        return self.lam * float(np.sum(np.abs(x))) + 0.5 * self.mu * float(np.dot(x, x))

    def prox(self, x, step):
        return prox_elastic_net(x, step, self.lam, self.mu)

    def __repr__(self):
        return f"ElasticNetRegularizer(lam={self.lam}, mu={self.mu})"

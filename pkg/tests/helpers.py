import re
import pytest
from contextlib import contextmanager

import numpy as np

from pycatalyst.core import CompositeObjective
from pycatalyst.problems import QuadraticOracle, ZeroRegularizer


class AnyObject:
    def __eq__(self, actual):
        return True

    def __ne__(self, other):
        return False


class ComparableRegex:
    """Assert that a given string meets some expectations."""

    def __init__(self, pattern, flags=0):
        self._regex = re.compile(pattern, flags)

    def __eq__(self, actual):
        return bool(self._regex.match(actual))

    def __repr__(self):
        return self._regex.pattern


@contextmanager
def not_raises(exception):
    try:
        yield
    except exception:
        raise pytest.fail("DID RAISE {0}".format(exception))


def random_spd(rng, p, mu, L):
    """
    Symmetric matrix with eigenvalues spread from mu to L in a random basis.
    """
    basis, _ = np.linalg.qr(rng.standard_normal((p, p)))
    eigenvalues = np.linspace(mu, L, p)
    matrix = (basis * eigenvalues) @ basis.T
    return 0.5 * (matrix + matrix.T)


def quadratic_objective(Q, b, reg=None):
    return CompositeObjective(QuadraticOracle(Q, b), reg if reg is not None else ZeroRegularizer())


def grid_minimize(objective, center, half_width, step=1e-6):
    """
    Brute-force 1-d minimizer of objective over a grid around center.
    """
    grid = np.arange(center - half_width, center + half_width + step, step)
    return float(grid[np.argmin(objective(grid))])


def reference_minimum(sub, iterations=20000):
    """
    Optimal value of a sub-problem from a long proximal gradient run.
    """
    eta = 1.0 / sub.L
    z = np.array(sub.center, dtype=np.float64)
    for _ in range(iterations):
        z = sub.prox(z - eta * sub.smooth_gradient(z), eta)
    return z, sub.value(z)

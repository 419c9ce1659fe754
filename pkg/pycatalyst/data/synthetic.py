"""
Seeded synthetic problems: Gaussian designs with a prescribed condition number and
labels from a planted sparse model.
"""
from enum import Enum
import logging

import numpy as np
from scipy import linalg

from pycatalyst.core import Dataset
from pycatalyst.exceptions import InputError

logger = logging.getLogger(__name__)


class SyntheticKind(Enum):
    LEAST_SQUARES = "LEAST_SQUARES"
    LOGISTIC = "LOGISTIC"

    @staticmethod
    def from_value(string):
        try:
            return SyntheticKind(string.upper())
        except (ValueError, AttributeError):
            return None


class SyntheticSpec:
    def __init__(self, kind, n, p, condition=1.0, sparsity=1.0, noise=0.1, seed=0):
        validations = []
        if int(n) < 1 or int(p) < 1:
            validations.append(f"n and p must be at least 1, got n={n}, p={p}")
        if not condition >= 1:
            validations.append(f"condition must be at least 1, got {condition}")
        if not 0 < sparsity <= 1:
            validations.append(f"sparsity must lie in (0, 1], got {sparsity}")
        if not noise >= 0:
            validations.append(f"noise must be non-negative, got {noise}")
        if validations:
            raise InputError("; ".join(validations))

        self.kind = kind
        self.n = int(n)
        self.p = int(p)
        self.condition = float(condition)
        self.sparsity = float(sparsity)
        self.noise = float(noise)
        self.seed = seed

    def __repr__(self):
        return (
            f"SyntheticSpec({self.kind.name}, n={self.n}, p={self.p}, condition={self.condition}, "
            f"sparsity={self.sparsity}, noise={self.noise}, seed={self.seed})"
        )


def _design(rng, n, p, condition):
    """
    Gaussian matrix whose singular values are log-spaced from sqrt(n) down to sqrt(n)/condition.
    """
    gaussian = rng.standard_normal((n, p))
    left, _, right = linalg.svd(gaussian, full_matrices=False)
    singular = np.sqrt(n) * np.geomspace(1.0, 1.0 / condition, num=min(n, p))
    return (left * singular) @ right


def gen_synthetic(spec):
    rng = np.random.default_rng(spec.seed)
    features = _design(rng, spec.n, spec.p, spec.condition)

    support = max(1, int(round(spec.sparsity * spec.p)))
    planted = np.zeros(spec.p)
    planted[rng.choice(spec.p, size=support, replace=False)] = rng.standard_normal(support)

    signal = features @ planted
    if spec.kind == SyntheticKind.LEAST_SQUARES:
        labels = signal + spec.noise * rng.standard_normal(spec.n)
    elif spec.kind == SyntheticKind.LOGISTIC:
        logits = signal + spec.noise * rng.logistic(size=spec.n)
        labels = np.where(logits >= 0, 1.0, -1.0)
    else:
        raise InputError(f"unknown synthetic kind {spec.kind}")

    dataset = Dataset(features, labels)
    logger.debug("generated %s from %s", dataset, spec)
    return dataset

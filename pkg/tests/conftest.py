import pytest
import numpy as np

from pycatalyst.data import SyntheticKind, SyntheticSpec, gen_synthetic, normalize_rows


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def logistic_data():
    return normalize_rows(gen_synthetic(SyntheticSpec(SyntheticKind.LOGISTIC, n=40, p=6, seed=3)))


@pytest.fixture
def least_squares_data():
    return normalize_rows(gen_synthetic(SyntheticSpec(SyntheticKind.LEAST_SQUARES, n=30, p=5, seed=5)))


@pytest.fixture
def tiny_data():
    """
    Three hand-written rows over four features.
    """
    from pycatalyst.core import Dataset, SparseRow

    rows = [
        SparseRow([0, 2], [0.6, 0.8], 4),
        SparseRow([1], [1.0], 4),
        SparseRow([0, 3], [-0.8, 0.6], 4),
    ]
    return Dataset.from_rows(rows, [1.0, -1.0, 1.0])

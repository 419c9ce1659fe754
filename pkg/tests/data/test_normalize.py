import numpy as np

from pycatalyst.core import Dataset, SparseRow
from pycatalyst.data import normalize_rows


def test_unit_rows():
    dataset = Dataset.from_rows([SparseRow([0, 1], [3.0, 4.0], 2)], [1.0])
    normalized = normalize_rows(dataset)
    assert normalized.row(0) == SparseRow([0, 1], [0.6, 0.8], 2)


def test_zero_row_untouched():
    dataset = Dataset.from_rows([SparseRow([], [], 3), SparseRow([2], [-5.0], 3)], [1.0, -1.0])
    normalized = normalize_rows(dataset)

    assert normalized.row(0).nnz == 0
    assert normalized.row(1) == SparseRow([2], [-1.0], 3)
    np.testing.assert_array_equal(normalized.labels, dataset.labels)


def test_idempotent(least_squares_data):
    twice = normalize_rows(least_squares_data)
    difference = abs(twice.features - least_squares_data.features)
    assert difference.max() <= 1e-15


def test_preserves_sparsity(rng):
    features = rng.standard_normal((10, 6)) * (rng.random((10, 6)) < 0.5)
    dataset = Dataset(features, np.ones(10))
    normalized = normalize_rows(dataset)

    np.testing.assert_array_equal(normalized.features.indptr, dataset.features.indptr)
    np.testing.assert_array_equal(normalized.features.indices, dataset.features.indices)
    norms = np.sqrt(normalized.row_norms_squared())
    np.testing.assert_allclose(norms[dataset.row_norms_squared() > 0], 1.0, rtol=1e-14)

import numpy as np
from scipy import sparse

from pycatalyst.core import Dataset


def normalize_rows(dataset):
    """
    Scale every nonzero row to unit l2 norm; zero rows are left as they are.
    """
    norms = np.sqrt(dataset.row_norms_squared())
    scale = np.ones_like(norms)
    nonzero = norms > 0
    scale[nonzero] = 1.0 / norms[nonzero]
    return Dataset(sparse.diags(scale) @ dataset.features, dataset.labels)

from __future__ import annotations

from numpy import asarray
from numpy import float64
from numpy import ndarray
from numpy import sqrt
from numpy import where
from scipy.sparse import csr_matrix
from scipy.sparse import diags

from perfl.core.errors import ParameterError


# target row norm: the logistic curvature bound |a|^2/4 becomes exactly 1
ROW_NORM = 2.0


class Dataset(object):
    """ Sparse feature rows with binary labels """

    features: csr_matrix
    """ rows x d, column t is feature index t+1 on disk """

    labels: ndarray
    """ -1 or +1 per row """

    def __init__(self, features, labels) -> None:
        self.features = csr_matrix(features, dtype=float64)
        self.labels = asarray(labels, dtype=float64)

        if self.features.shape[0] < 1 or self.labels.shape != (self.features.shape[0],):
            raise ParameterError("need at least one row and one label per row")

        self.features.sort_indices()

    @property
    def rows(self) -> int:
        return self.features.shape[0]

    @property
    def d(self) -> int:
        return self.features.shape[1]

    def subset(self, indices) -> Dataset:
        return Dataset(self.features[indices], self.labels[indices])

    def dense_rows(self, indices) -> ndarray:
        return self.features[indices].toarray()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Dataset):
            return NotImplemented

        return (self.features.shape == other.features.shape
                and (self.labels == other.labels).all()
                and (self.features != other.features).nnz == 0)

    def __repr__(self) -> str:
        return "Dataset(rows=%d, d=%d, nnz=%d)" % (self.rows, self.d, self.features.nnz)


def normalize(data: Dataset) -> Dataset:
    """ Scales every nonzero row to norm 2; zero rows stay zero """

    norms = sqrt(asarray(data.features.multiply(data.features).sum(axis=1)).ravel())
    scale = where(norms > 0, ROW_NORM / where(norms > 0, norms, 1.0), 1.0)

    return Dataset(diags(scale) @ data.features, data.labels)

from numpy import asarray
from numpy import einsum
from numpy import float64
from numpy import isin
from numpy import logaddexp
from numpy import ndarray
from scipy.linalg import eigvalsh
from scipy.special import expit

from perfl.core.errors import ParameterError
from perfl.core.errors import ProxError
from perfl.core.smoothness_info import SmoothnessInfo
from perfl.losses.local_loss import LocalLoss
from perfl.losses.local_loss import PROX_TOL
from perfl.subsolvers.agd import agd_minimize
from perfl.subsolvers.local_subproblem import LocalSubproblem


# ridge weight used throughout the experiments
DEFAULT_REG = 1e-4


class LogisticLoss(LocalLoss):
    """ Average of log(1 + exp(b_j a_j'z)) + reg |z|^2 / 2 over the rows.

    The label enters with a plus sign; the usual minus-sign convention is
    the same loss with every label flipped. """

    rows: ndarray
    """ m x d feature matrix, one data point a_j per row """

    labels: ndarray
    """ b_j in {-1, +1} """

    reg: float
    """ ridge weight, also the strong convexity of the loss """

    def __init__(self, rows, labels, reg: float = DEFAULT_REG) -> None:
        rows = asarray(rows, dtype=float64)
        labels = asarray(labels, dtype=float64)

        if rows.ndim != 2 or labels.shape != (rows.shape[0],) or rows.shape[0] < 1:
            raise ParameterError("need an m x d matrix and m labels, got %s and %s"
                                 % (rows.shape, labels.shape))

        if not isin(labels, (-1.0, 1.0)).all():
            raise ParameterError("labels must be -1 or +1")

        if not reg > 0:
            raise ParameterError("reg must be positive, got %r" % reg)

        self.rows = rows
        self.labels = labels
        self.reg = float(reg)

        # b_j a_j, so every margin is one matrix-vector product
        self._signed = rows * labels[:, None]

    @property
    def dim(self) -> int:
        return self.rows.shape[1]

    @property
    def m(self) -> int:
        return self.rows.shape[0]

    def value(self, z: ndarray) -> float:
        margins = self._signed @ z
        return float(logaddexp(0.0, margins).mean() + 0.5 * self.reg * z @ z)

    def grad(self, z: ndarray) -> ndarray:
        weights = expit(self._signed @ z)
        return self._signed.T @ weights / self.m + self.reg * z

    def summand_grad(self, j: int, z: ndarray) -> ndarray:
        self.check_index(j)

        row = self._signed[j]
        return expit(row @ z) * row + self.reg * z

    def prox(self, beta: float, v: ndarray, tol: float = PROX_TOL) -> ndarray:
        """ Accelerated gradient on f + |z - v|^2/(2 beta), warm-started at v """

        if not beta > 0:
            raise ParameterError("prox needs beta > 0, got %r" % beta)

        h = LocalSubproblem(self, 1 / beta, v)
        z, residual, iterations = agd_minimize(h, v, tol)

        if residual > tol:
            raise ProxError(residual, tol, iterations)

        return z

    def estimate_constants(self) -> SmoothnessInfo:
        norms_sq = einsum("ij,ij->i", self.rows, self.rows)

        # the smaller Gram matrix shares the nonzero spectrum of A'A
        if self.m <= self.dim:
            gram = self.rows @ self.rows.T
        else:
            gram = self.rows.T @ self.rows

        L = float(eigvalsh(gram)[-1]) / (4 * self.m) + self.reg
        L_tilde = 0.25 * float(norms_sq.max()) + self.reg

        return SmoothnessInfo(mu=self.reg, L=min(L, L_tilde), L_tilde=L_tilde, m=self.m)

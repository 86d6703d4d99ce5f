from numpy import asarray
from numpy import eye
from numpy import float64
from numpy import ndarray
from scipy.linalg import eigvalsh

from perfl.core.errors import ParameterError
from perfl.core.smoothness_info import SmoothnessInfo
from perfl.losses.quadratic_loss import QuadraticLoss


class FiniteSumQuadraticLoss(QuadraticLoss):
    """ f(z) = (1/m) sum_j (z'A_j z/2 + b_j'z) + mu_shift |z|^2 / 2 """

    def __init__(self, As, bs, mu_shift: float = 0.0) -> None:
        As = asarray(As, dtype=float64)
        bs = asarray(bs, dtype=float64)

        if As.ndim != 3 or bs.ndim != 2 or As.shape[0] != bs.shape[0] or As.shape[0] < 1:
            raise ParameterError("need m matrices and m vectors, got %s and %s" % (As.shape, bs.shape))

        super().__init__(As.mean(axis=0), bs.mean(axis=0), mu_shift)

        identity = eye(self.dim)

        self.summand_hessians = [(A + A.T) / 2 + self.mu_shift * identity for A in As]
        self.summand_linear = list(bs)

    @property
    def m(self) -> int:
        return len(self.summand_linear)

    def summand_grad(self, j: int, z: ndarray) -> ndarray:
        self.check_index(j)
        return self.summand_hessians[j] @ z + self.summand_linear[j]

    def estimate_constants(self) -> SmoothnessInfo:
        eigs = eigvalsh(self._hessian)
        L_tilde = max(float(eigvalsh(H)[-1]) for H in self.summand_hessians)

        return SmoothnessInfo(mu=float(eigs[0]), L=float(eigs[-1]), L_tilde=L_tilde, m=self.m)

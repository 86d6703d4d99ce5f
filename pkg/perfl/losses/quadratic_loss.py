from numpy import allclose
from numpy import asarray
from numpy import eye
from numpy import float64
from numpy import ndarray
from scipy.linalg import cho_factor
from scipy.linalg import cho_solve
from scipy.linalg import eigvalsh

from perfl.core.errors import ParameterError
from perfl.core.smoothness_info import SmoothnessInfo
from perfl.losses.local_loss import LocalLoss
from perfl.losses.local_loss import PROX_TOL


class QuadraticLoss(LocalLoss):
    """ f(z) = z'Az/2 + b'z + mu_shift |z|^2 / 2 """

    is_quadratic = True

    A: ndarray
    """ symmetric positive semidefinite d x d """

    b: ndarray
    """ linear term """

    mu_shift: float
    """ ridge added on top of A """

    def __init__(self, A, b, mu_shift: float = 0.0) -> None:
        A = asarray(A, dtype=float64)
        b = asarray(b, dtype=float64)

        if A.ndim != 2 or A.shape[0] != A.shape[1] or b.shape != (A.shape[0],):
            raise ParameterError("quadratic needs a square A and a matching b, got %s and %s"
                                 % (A.shape, b.shape))

        if not allclose(A, A.T, rtol=1e-12, atol=1e-12):
            raise ParameterError("quadratic needs a symmetric A")

        self.A = (A + A.T) / 2
        self.b = b
        self.mu_shift = float(mu_shift)

        self._hessian = self.A + self.mu_shift * eye(self.dim)

        # beta -> Cholesky factors of (hessian + I/beta)
        self._factors = {}

    @property
    def dim(self) -> int:
        return self.b.shape[0]

    def hessian(self) -> ndarray:
        return self._hessian.copy()

    def linear_term(self) -> ndarray:
        return self.b.copy()

    def value(self, z: ndarray) -> float:
        return float(0.5 * z @ (self._hessian @ z) + self.b @ z)

    def grad(self, z: ndarray) -> ndarray:
        return self._hessian @ z + self.b

    def prox(self, beta: float, v: ndarray, tol: float = PROX_TOL) -> ndarray:
        """ Exact: (H + I/beta) z = v/beta - b """

        if not beta > 0:
            raise ParameterError("prox needs beta > 0, got %r" % beta)

        factors = self._factors.get(beta)

        if factors is None:
            factors = cho_factor(self._hessian + eye(self.dim) / beta)
            self._factors[beta] = factors

        return cho_solve(factors, v / beta - self.b)

    def estimate_constants(self) -> SmoothnessInfo:
        eigs = eigvalsh(self._hessian)
        return SmoothnessInfo(mu=float(eigs[0]), L=float(eigs[-1]), L_tilde=float(eigs[-1]), m=1)

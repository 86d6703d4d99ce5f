from numpy import asarray
from numpy import float64
from numpy import ndarray

from perfl.core.smoothness_info import SmoothnessInfo


class LocalSubproblem(object):
    """ h(z) = f(z) + (lam/2)|z - center|^2 for one client.

    Summand j of h is the summand j of f plus the same proximity term. """

    def __init__(self, loss, lam: float, center, constants: SmoothnessInfo = None) -> None:
        self.loss = loss
        self.lam = float(lam)
        self.center = asarray(center, dtype=float64)

        base = constants or loss.constants

        self.mu = base.mu + self.lam
        """ strong convexity of h """

        self.smoothness = base.L + self.lam
        """ smoothness of h """

        self.summand_smoothness = base.L_tilde + self.lam
        """ smoothness of every summand of h """

    @property
    def m(self) -> int:
        return self.loss.m

    @property
    def dim(self) -> int:
        return self.loss.dim

    def value(self, z: ndarray) -> float:
        shift = z - self.center
        return self.loss.value(z) + 0.5 * self.lam * float(shift @ shift)

    def grad(self, z: ndarray) -> ndarray:
        return self.loss.grad(z) + self.lam * (z - self.center)

    def summand_grad(self, j: int, z: ndarray) -> ndarray:
        return self.loss.summand_grad(j, z) + self.lam * (z - self.center)

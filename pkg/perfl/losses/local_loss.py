from functools import cached_property

from numpy import ndarray

from perfl.core.smoothness_info import SmoothnessInfo


# stationarity residual accepted from an iterative prox
PROX_TOL = 1e-10


class LocalLoss(object):
    """ f_i, the loss held by one client.

    Subclasses provide values, gradients, summand gradients (j is 0-based),
    a prox and their curvature constants. """

    is_quadratic = False

    @property
    def dim(self) -> int:
        raise NotImplementedError("dim")

    @property
    def m(self) -> int:
        return 1

    def value(self, z: ndarray) -> float:
        raise NotImplementedError("value")

    def grad(self, z: ndarray) -> ndarray:
        raise NotImplementedError("grad")

    def summand_grad(self, j: int, z: ndarray) -> ndarray:
        self.check_index(j)
        return self.grad(z)

    def prox(self, beta: float, v: ndarray, tol: float = PROX_TOL) -> ndarray:
        """ argmin_z f(z) + |z - v|^2 / (2 beta) """

        raise NotImplementedError("prox")

    def estimate_constants(self) -> SmoothnessInfo:
        raise NotImplementedError("estimate_constants")

    @cached_property
    def constants(self) -> SmoothnessInfo:
        return self.estimate_constants()

    def check_index(self, j: int) -> None:
        if not 0 <= j < self.m:
            raise IndexError("summand index %d outside [0, %d)" % (j, self.m))

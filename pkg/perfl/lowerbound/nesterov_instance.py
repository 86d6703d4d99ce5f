from numpy import zeros

from perfl.core.errors import InstanceError
from perfl.core.problem import Problem
from perfl.losses.quadratic_loss import QuadraticLoss


def nesterov_loss(d: int, mu: float, L: float) -> QuadraticLoss:
    """ (L-mu)/8 (z_1^2 + sum (z_i - z_i+1)^2 + z_d^2 - 2 z_1) + mu/2 |z|^2

    Tridiagonal, so a gradient reaches one new coordinate at a time. """

    if not L > mu > 0:
        raise InstanceError("need L > mu > 0, got L=%r mu=%r" % (L, mu))

    weight = (L - mu) / 4

    A = zeros((d, d))
    for t in range(d):
        A[t, t] = 2 * weight

        if t + 1 < d:
            A[t, t + 1] = A[t + 1, t] = -weight

    b = zeros(d)
    b[0] = -weight

    return QuadraticLoss(A, b, mu)


def build_nesterov_instance(d: int, mu: float, L: float, n: int, lam: float = 1.0) -> Problem:
    """ Every client holds the same worst-case quadratic """

    loss = nesterov_loss(d, mu, L)
    return Problem([loss] * n, lam)

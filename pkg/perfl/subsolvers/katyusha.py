from numpy import array
from numpy import float64
from numpy import ndarray
from numpy.random import Generator

from perfl.core.errors import ParameterError
from perfl.core.local_work import LocalWork
from perfl.core.loopless_parameters import LooplessParameters
from perfl.subsolvers.agd import check_descent
from perfl.subsolvers.local_subproblem import LocalSubproblem


def katyusha_parameters(h: LocalSubproblem) -> LooplessParameters:
    return LooplessParameters.from_constants(
        smoothness=h.smoothness,
        expected_smoothness=h.summand_smoothness,
        strong_convexity=h.mu,
        rho=1 / h.m,
    )


def katyusha_solve(h: LocalSubproblem, z0: ndarray, iters: int, stream: Generator,
                   params: LooplessParameters = None) -> tuple[ndarray, LocalWork]:
    """ Loopless Katyusha on the finite sum h = (1/m) sum_j h_j, started at z0.

    The anchor w is refreshed with probability 1/m, each refresh costing one
    full gradient; every iteration costs two summand gradients. Ending above
    h(z0) beyond the relative tolerance of check_descent raises SubsolverError. """

    if iters < 1:
        raise ParameterError("Katyusha needs at least one iteration, got %d" % iters)

    params = params or katyusha_parameters(h)
    rho = 1 / h.m

    y = array(z0, dtype=float64)
    z = y.copy()
    w = y.copy()

    anchor_grad = h.grad(w)
    grad_calls = 1

    for _ in range(iters):
        x = params.theta1 * z + params.theta2 * w + (1 - params.theta1 - params.theta2) * y

        j = int(stream.integers(h.m))
        g = anchor_grad + h.summand_grad(j, x) - h.summand_grad(j, w)

        y_next = x - params.eta * g
        z = params.beta * z + (1 - params.beta) * x + (params.gamma / params.eta) * (y_next - x)
        y = y_next

        if stream.random() < rho:
            w = y.copy()
            anchor_grad = h.grad(w)
            grad_calls += 1

    check_descent(h, z0, y)

    return y, LocalWork(grad_calls=grad_calls, summand_grad_calls=2 * iters)

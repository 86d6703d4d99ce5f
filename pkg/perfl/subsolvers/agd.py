from math import sqrt
from logging import debug

from numpy import array
from numpy import float64
from numpy import isfinite
from numpy import ndarray
from numpy.linalg import norm

from perfl.core.errors import ParameterError
from perfl.core.errors import SubsolverError
from perfl.core.local_work import LocalWork
from perfl.subsolvers.local_subproblem import LocalSubproblem


# iterative prox gives up after this many steps
MAX_PROX_ITERATIONS = 100000

# stationarity is measured every few steps, it costs a gradient
RESIDUAL_EVERY = 10

# relative rise of h over its start tolerated as rounding
DESCENT_SLACK = 1e-9


def momentum(kappa: float) -> float:
    """ (sqrt(kappa) - 1)/(sqrt(kappa) + 1), zero for kappa = 1 """

    root = sqrt(kappa)
    return (root - 1) / (root + 1)


def agd_solve(h: LocalSubproblem, z0: ndarray, iters: int) -> tuple[ndarray, LocalWork]:
    """ Constant-step Nesterov scheme for a strongly convex h, started at z0.

    Uses step 1/L and momentum from kappa = L/mu of h, and exactly `iters`
    gradients. """

    if iters < 1:
        raise ParameterError("AGD needs at least one iteration, got %d" % iters)

    step = 1 / h.smoothness
    beta = momentum(h.smoothness / h.mu)

    x = array(z0, dtype=float64)
    y = x.copy()

    for _ in range(iters):
        x_next = y - step * h.grad(y)
        y = x_next + beta * (x_next - x)
        x = x_next

    check_descent(h, z0, x)

    return x, LocalWork(grad_calls=iters)


def agd_minimize(h: LocalSubproblem, z0: ndarray, tol: float,
                 max_iter: int = MAX_PROX_ITERATIONS) -> tuple[ndarray, float, int]:
    """ Runs AGD from z0 until |grad h| <= tol; returns (z, residual, iterations) """

    step = 1 / h.smoothness
    beta = momentum(h.smoothness / h.mu)

    x = array(z0, dtype=float64)
    residual = float(norm(h.grad(x)))

    if residual <= tol:
        return x, residual, 0

    y = x.copy()

    for t in range(1, max_iter + 1):
        x_next = y - step * h.grad(y)
        y = x_next + beta * (x_next - x)
        x = x_next

        if t % RESIDUAL_EVERY == 0:
            residual = float(norm(h.grad(x)))

            if residual <= tol:
                debug("prox converged in %d steps, residual %.3e", t, residual)
                return x, residual, t

    return x, float(norm(h.grad(x))), max_iter


def check_descent(h: LocalSubproblem, z0: ndarray, z: ndarray) -> None:
    """ Inner solvers must not end above their warm start """

    start = h.value(z0)
    end = h.value(z)

    if not (isfinite(z).all() and isfinite(end)):
        raise SubsolverError("non-finite inner iterate")

    if end - start > DESCENT_SLACK * (1 + abs(start)):
        raise SubsolverError("inner objective increased from %.12e to %.12e" % (start, end))

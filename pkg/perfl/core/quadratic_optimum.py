from numpy import eye
from numpy import kron
from numpy import ndarray
from numpy import ones
from numpy import zeros
from scipy.linalg import LinAlgError
from scipy.linalg import solve

from perfl.core.errors import ParameterError
from perfl.core.problem import Problem
from perfl.core.stacked_point import StackedPoint


def assemble_hessian(p: Problem) -> tuple[ndarray, ndarray]:
    """ (H, c) with grad F(x) = H x + c on the flattened point """

    if not p.is_quadratic():
        raise ParameterError("closed-form optimum needs quadratic losses")

    n, d = p.n, p.d

    H = kron(eye(n) - ones((n, n)) / n, eye(d)) * (p.lam / n)
    c = zeros(n * d)

    for i, loss in enumerate(p.losses):
        part = slice(i * d, (i + 1) * d)

        H[part, part] += loss.hessian() / n
        c[part] = loss.linear_term() / n

    return H, c


def quadratic_optimum(p: Problem) -> StackedPoint:
    """ Solves grad F(x*) = 0 as one symmetric positive definite system """

    H, c = assemble_hessian(p)

    try:
        flat = solve(H, -c, assume_a="pos")
    except LinAlgError as e:
        raise ParameterError("singular optimality system: %s" % e)

    return StackedPoint.from_flat(flat, p.n)

from numpy import array
from numpy import median
from numpy import ndarray
from numpy.linalg import norm

from perfl.core.quadratic_optimum import quadratic_optimum
from perfl.core.stacked_point import StackedPoint
from perfl.lowerbound.lower_bound_instance import LowerBoundInstance


def chain_pairs(inst: LowerBoundInstance, x: StackedPoint) -> list[ndarray]:
    """ w_1 .. w_2T: (y_i, z_i) at odd 1-based i, (z_i, y_i) at even i,
    y from the first group and z from the second """

    y = x.blocks[0]
    z = x.blocks[-1]

    return [array((y[t], z[t])) if t % 2 == 0 else array((z[t], y[t])) for t in range(inst.d)]


def exact_optimum(inst: LowerBoundInstance) -> tuple[StackedPoint, float]:
    """ x* by a direct linear solve and the fitted decay ratio of its pairs """

    x_star = quadratic_optimum(inst.problem)
    pairs = chain_pairs(inst, x_star)

    ratios = [norm(pairs[t + 1]) / norm(pairs[t]) for t in range(len(pairs) - 1)]

    return x_star, float(median(ratios))

from perfl.core.stacked_point import StackedPoint


def psi_value(x: StackedPoint) -> float:
    """ (1/2n) sum_i |x_i - x̄|^2, zero exactly at consensus """

    deviation = x.blocks - x.mean()
    return float((deviation ** 2).sum()) / (2 * x.n)


def psi_grad(x: StackedPoint) -> StackedPoint:
    """ Block i is (x_i - x̄)/n; the blocks sum to zero """

    return StackedPoint((x.blocks - x.mean()) / x.n)

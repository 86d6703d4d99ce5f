from perfl.core.penalty import psi_grad
from perfl.core.penalty import psi_value
from perfl.core.problem import Problem
from perfl.core.stacked_point import StackedPoint


def local_average(p: Problem, x: StackedPoint) -> float:
    """ f(x) = (1/n) sum_i f_i(x_i) """

    assert x.n == p.n and x.d == p.d
    return sum(loss.value(x.blocks[i]) for i, loss in enumerate(p.losses)) / p.n


def objective_value(p: Problem, x: StackedPoint) -> float:
    return local_average(p, x) + p.lam * psi_value(x)


def objective_grad(p: Problem, x: StackedPoint) -> StackedPoint:
    """ Block i is (1/n) grad f_i(x_i) + (lambda/n)(x_i - x̄) """

    assert x.n == p.n and x.d == p.d

    local = StackedPoint([loss.grad(x.blocks[i]) for i, loss in enumerate(p.losses)])
    return local * (1 / p.n) + psi_grad(x) * p.lam


def bregman_f(p: Problem, w: StackedPoint, x: StackedPoint) -> float:
    """ D_F(w, x) = F(w) - F(x) - <grad F(x), w - x> """

    return objective_value(p, w) - objective_value(p, x) - objective_grad(p, x).dot(w - x)

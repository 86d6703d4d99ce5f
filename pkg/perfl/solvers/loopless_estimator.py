from numpy import ndarray

from perfl.core.objective import objective_grad
from perfl.core.problem import Problem
from perfl.core.stacked_point import StackedPoint


def expected_smoothness(lam: float, L_tilde: float, n: int, p: float) -> float:
    """ Constant of E|g - grad F(x)|^2 <= 2 * this * D_F(w, x) """

    value = L_tilde / (n * (1 - p))

    if lam > 0:
        value = max(value, lam / (n * p))

    return value


def local_estimate(summands_x: ndarray, summands_w: ndarray, w: ndarray, w_bar: ndarray,
                   anchor_grads: ndarray, lam: float, p: float) -> ndarray:
    """ Estimator on a local step (coin = 0), all clients at once """

    n = w.shape[0]
    return (summands_x - summands_w) / (n * (1 - p)) + anchor_grads / n + (lam / n) * (w - w_bar)


def aggregation_estimate(x: ndarray, x_bar: ndarray, w: ndarray, w_bar: ndarray,
                         anchor_grads: ndarray, lam: float, p: float) -> ndarray:
    """ Estimator on an aggregation step (coin = 1) """

    n = x.shape[0]
    return (lam / (n * p)) * (x - x_bar) - ((1 / p - 1) * lam / n) * (w - w_bar) + anchor_grads / n


def estimator_moments(problem: Problem, x: StackedPoint, w: StackedPoint, p: float) -> tuple[StackedPoint, float]:
    """ Exact E[g] and E|g - grad F(x)|^2 by enumerating the aggregation
    coin and, for each client, its summand index """

    n, m, lam = problem.n, problem.m, problem.lam
    losses = problem.losses

    anchor_grads = StackedPoint([loss.grad(w.blocks[i]) for i, loss in enumerate(losses)]).blocks
    w_bar = w.mean()
    target = objective_grad(problem, x).blocks

    aggregated = aggregation_estimate(x.blocks, x.mean(), w.blocks, w_bar, anchor_grads, lam, p)

    mean = p * aggregated
    variance = p * float(((aggregated - target) ** 2).sum())

    for j in range(m):
        summands_x = StackedPoint([loss.summand_grad(j, x.blocks[i]) for i, loss in enumerate(losses)]).blocks
        summands_w = StackedPoint([loss.summand_grad(j, w.blocks[i]) for i, loss in enumerate(losses)]).blocks

        local = local_estimate(summands_x, summands_w, w.blocks, w_bar, anchor_grads, lam, p)

        # clients draw j independently; the blocks separate, so a common j
        # gives the same mean and the same blockwise second moment
        mean = mean + (1 - p) / m * local
        variance += (1 - p) / m * float(((local - target) ** 2).sum())

    return StackedPoint(mean), variance

from numpy import ndarray

from perfl.core.communication_round import CommunicationRound
from perfl.core.stacked_point import StackedPoint
from perfl.solvers.solver import Solver


def penalty_prox(stepped: ndarray, center: ndarray, L: float, lam: float) -> ndarray:
    """ Prox of lambda psi after a local step: blend each block with the average """

    return (L * stepped + lam * center) / (L + lam)


class Pgd2(Solver):
    """ Local gradient step, average, blend: one gradient and one round per iteration """

    def momentum(self) -> float:
        return 0.0

    def on_start(self) -> StackedPoint:
        self.L = self.problem.constants.L
        self.beta = self.momentum()

        self.x = self.config.x0.blocks.copy()
        self.y = self.x.copy()

        return StackedPoint(self.x)

    def on_iteration(self, k: int) -> StackedPoint:
        stepped = self.y - self.local_gradients(self.y) / self.L

        with CommunicationRound(self.ledger, "local step average"):
            center = stepped.mean(axis=0)

        x_next = penalty_prox(stepped, center, self.L, self.problem.lam)

        self.y = x_next + self.beta * (x_next - self.x)
        self.x = x_next

        return StackedPoint(self.x)

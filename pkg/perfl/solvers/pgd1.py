from numpy import ndarray

from perfl.core.communication_round import CommunicationRound
from perfl.core.errors import ParameterError
from perfl.core.stacked_point import StackedPoint
from perfl.losses.local_loss import PROX_TOL
from perfl.solvers.solver import Solver


class Pgd1(Solver):
    """ x_i <- prox_{f_i/lambda}(x̄): one prox and one round per iteration """

    PARAMETERS = frozenset({"prox_tol"})

    def check(self) -> None:
        if not self.problem.lam > 0:
            raise ParameterError("%s needs lambda > 0" % self.config.method.label)

    def momentum(self) -> float:
        return 0.0

    def on_start(self) -> StackedPoint:
        self.check()

        self.prox_tol = self.config.param("prox_tol", PROX_TOL)
        self.beta = self.momentum()

        self.x = self.config.x0.blocks.copy()
        self.y = self.x.copy()

        return StackedPoint(self.x)

    def on_iteration(self, k: int) -> StackedPoint:
        with CommunicationRound(self.ledger, "y average"):
            center = self.y.mean(axis=0)

        x_next = self.local_step(k, center)

        self.y = x_next + self.beta * (x_next - self.x)
        self.x = x_next

        return StackedPoint(self.x)

    def local_step(self, k: int, center: ndarray) -> ndarray:
        return self.local_proxes(center, self.prox_tol)

from logging import info

from perfl.core.loopless_parameters import LooplessParameters
from perfl.core.stacked_point import StackedPoint
from perfl.solvers.loopless_solver import LooplessSolver


class Al2sgdPlus(LooplessSolver):
    """ Accelerated loopless local SGD; reports the y sequence """

    PARAMETERS = frozenset({"p", "rho", "eta", "theta1", "theta2"})

    def on_start(self) -> StackedPoint:
        x = super().on_start()

        params = LooplessParameters.from_constants(
            smoothness=self.smoothness,
            expected_smoothness=self.expected,
            strong_convexity=self.problem.constants.mu / self.problem.n,
            rho=self.rho,
        )

        self.params = params.override(
            eta=self.config.param("eta"),
            theta1=self.config.param("theta1"),
            theta2=self.config.param("theta2"),
        )

        info("p=%g rho=%g %s", self.p, self.rho, self.params)

        self.y = x.blocks.copy()
        self.z = x.blocks.copy()

        return x

    def on_iteration(self, k: int) -> StackedPoint:
        eta, theta1, theta2, gamma, beta = (
            self.params.eta, self.params.theta1, self.params.theta2, self.params.gamma, self.params.beta)

        x = theta1 * self.z + theta2 * self.w + (1 - theta1 - theta2) * self.y

        y_next = x - eta * self.estimate(x)

        self.z = beta * self.z + (1 - beta) * x + (gamma / eta) * (y_next - x)
        self.y = y_next

        self.move_anchor(self.y)

        return StackedPoint(self.y)

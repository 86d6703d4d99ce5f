from perfl.core.stacked_point import StackedPoint
from perfl.solvers.loopless_solver import LooplessSolver


class L2sgdPlus(LooplessSolver):
    """ Plain step x <- x - eta g with the loopless estimator """

    PARAMETERS = frozenset({"p", "rho", "eta"})

    def on_start(self) -> StackedPoint:
        x = super().on_start()

        self.eta = float(self.config.param("eta", 1 / (4 * max(self.smoothness, self.expected))))
        self.x = x.blocks.copy()

        return x

    def on_iteration(self, k: int) -> StackedPoint:
        self.x = self.x - self.eta * self.estimate(self.x)
        self.move_anchor(self.x)

        return StackedPoint(self.x)

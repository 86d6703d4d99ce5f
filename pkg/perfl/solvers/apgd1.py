from math import sqrt

from perfl.solvers.pgd1 import Pgd1


def apgd1_momentum(lam: float, mu: float) -> float:
    return (sqrt(lam) - sqrt(mu)) / (sqrt(lam) + sqrt(mu))


class Apgd1(Pgd1):
    """ Accelerated Pgd1: the local prox is taken at the averaged momentum point """

    def check(self) -> None:
        super().check()
        self.problem.require_lambda_at_least(1.0, self.config.method.label)

    def momentum(self) -> float:
        return apgd1_momentum(self.problem.lam, self.problem.constants.mu)

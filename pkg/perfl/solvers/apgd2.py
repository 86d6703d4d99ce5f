from math import sqrt

from perfl.solvers.pgd2 import Pgd2


def apgd2_momentum(L: float, mu: float) -> float:
    root = sqrt(L / mu)
    return (root - 1) / (root + 1)


class Apgd2(Pgd2):
    """ Accelerated Pgd2, momentum from the local condition number """

    def momentum(self) -> float:
        return apgd2_momentum(self.problem.constants.L, self.problem.constants.mu)

from enum import IntEnum


class SolverMethod(IntEnum):
    """ Solvers for the personalized objective """

    PGD1 = 0,
    """ Proximal gradient with the prox taken on the local losses (FedProx-like). """

    PGD2 = 1,
    """ Proximal gradient with the prox taken on the penalty (local step then blend). """

    APGD1 = 2,
    """ Accelerated PGD1, exact local prox, momentum from lambda and mu. """

    APGD2 = 3,
    """ Accelerated PGD2, one local gradient per round, momentum from L and mu. """

    IAPGD_AGD = 4,
    """ APGD1 with the local prox solved by accelerated gradient descent. """

    IAPGD_KATYUSHA = 5,
    """ APGD1 with the local prox solved by loopless Katyusha on the finite sum. """

    L2SGD_PLUS = 6,
    """ Loopless local SGD with variance reduction, non-accelerated baseline. """

    AL2SGD_PLUS = 7
    """ Accelerated loopless local SGD with variance reduction. """

    @property
    def label(self) -> str:
        return self.name.lower()

from enum import IntEnum


class SubsolverKind(IntEnum):
    """ Inner solvers for the local prox subproblem """

    AGD = 0,
    """ Deterministic accelerated gradient descent, one full gradient per step. """

    KATYUSHA = 1
    """ Loopless Katyusha, summand gradients with a randomly refreshed anchor. """

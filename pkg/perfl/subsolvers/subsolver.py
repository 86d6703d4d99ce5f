from dataclasses import dataclass

from numpy import ndarray
from numpy.random import Generator

from perfl.core.errors import ParameterError
from perfl.core.local_work import LocalWork
from perfl.subsolvers.agd import agd_solve
from perfl.subsolvers.katyusha import katyusha_solve
from perfl.subsolvers.local_subproblem import LocalSubproblem
from perfl.subsolvers.subsolver_kind import SubsolverKind


@dataclass
class Subsolver(object):
    """ One inner solve of a client's subproblem """

    kind: SubsolverKind
    iters: int
    stream: Generator = None
    """ the client's own stream, Katyusha only """

    def __post_init__(self) -> None:
        if self.iters < 1:
            raise ParameterError("subsolver needs T >= 1, got %d" % self.iters)

        if self.kind == SubsolverKind.KATYUSHA and self.stream is None:
            raise ParameterError("Katyusha needs a random stream")

    def solve(self, h: LocalSubproblem, z0: ndarray) -> tuple[ndarray, LocalWork]:
        if self.kind == SubsolverKind.AGD:
            return agd_solve(h, z0, self.iters)

        return katyusha_solve(h, z0, self.iters, self.stream)

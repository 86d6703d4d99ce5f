from dataclasses import dataclass
from dataclasses import field

from perfl.core.errors import ParameterError
from perfl.core.solver_method import SolverMethod
from perfl.core.stacked_point import StackedPoint
from perfl.core.stop_criterion import StopCriterion


@dataclass
class SolverRun(object):
    """ What to run and when to stop """

    method: SolverMethod
    x0: StackedPoint
    max_comm: int
    """ the run ends once this many rounds have been spent """

    target: float = 0.0
    """ compared against the stop_on measure; 0 disables the target """

    seed: int = 0
    params: dict = field(default_factory=dict)
    """ method-specific values such as p, rho or iters """

    stop_on: StopCriterion = StopCriterion.REL_SUBOPT
    max_iter: int = None
    """ safety cap on iterations, None for no cap """

    keep_iterates: bool = False
    """ store x^k next to every trace row """

    def validate(self, allowed: frozenset) -> None:
        unknown = set(self.params) - set(allowed)

        if unknown:
            raise ParameterError("%s does not take %s (accepts: %s)" % (
                self.method.label, ", ".join(sorted(unknown)), ", ".join(sorted(allowed)) or "nothing"))

        if self.max_comm < 0:
            raise ParameterError("max_comm must be non-negative, got %d" % self.max_comm)

    def param(self, name: str, default=None):
        return self.params.get(name, default)

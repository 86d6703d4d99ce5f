from dataclasses import dataclass
from dataclasses import field
from math import isnan

from perfl.core.solver_method import SolverMethod
from perfl.core.stacked_point import StackedPoint
from perfl.core.stop_criterion import StopCriterion
from perfl.solvers.reference import Reference
from perfl.solvers.trace_row import TraceRow


@dataclass
class Trace(object):
    """ Rows of one solver run plus, on request, the matching iterates """

    method: SolverMethod
    reference: Reference
    rows: list[TraceRow] = field(default_factory=list)
    iterates: list[StackedPoint] = field(default_factory=list)

    final: StackedPoint = None
    iterations: int = 0

    def append(self, row: TraceRow, x: StackedPoint = None) -> None:
        assert not self.rows or row.comm_rounds >= self.rows[-1].comm_rounds
        self.rows.append(row)

        if x is not None:
            self.iterates.append(x)

    @property
    def last(self) -> TraceRow:
        return self.rows[-1]

    def measure(self, row: TraceRow, stop_on: StopCriterion) -> float:
        if stop_on == StopCriterion.REL_SUBOPT:
            return row.rel_subopt

        if stop_on == StopCriterion.DISTANCE:
            start = self.rows[0].dist_sq
            return row.dist_sq / start if start > 0 else 0.0

        return float("nan")

    def comm_to_target(self, target: float, stop_on: StopCriterion = StopCriterion.REL_SUBOPT) -> int:
        """ Rounds spent when the measure first reached target, None if never """

        for row in self.rows:
            value = self.measure(row, stop_on)

            if not isnan(value) and value <= target:
                return row.comm_rounds

        return None

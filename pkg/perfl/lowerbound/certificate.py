from dataclasses import dataclass
from dataclasses import field

from numpy import abs as absolute

from perfl.core.errors import CertificationError
from perfl.core.stacked_point import StackedPoint
from perfl.lowerbound.lower_bound_instance import LowerBoundInstance
from perfl.lowerbound.lower_bound_instance import gamma_floor
from perfl.solvers.trace import Trace


# entries below this count as exact zeros
SUPPORT_THRESHOLD = 1e-12


@dataclass(frozen=True)
class CertificationRow(object):
    k: int
    comm_rounds: int

    dist_sq: float
    """ |x^k - x*|^2 """

    bound: float
    """ smallest |x^k - x*|^2 the lower bound allows """

    support: int
    """ largest count of nonzero coordinates over the client blocks """

    @property
    def ratio(self) -> float:
        return self.dist_sq / self.bound if self.bound > 0 else float("inf")

    @property
    def support_limit(self) -> int:
        return self.comm_rounds + 1

    @property
    def passed(self) -> bool:
        return self.dist_sq >= self.bound and self.support <= self.support_limit


@dataclass
class CertificationReport(object):
    rows: list[CertificationRow] = field(default_factory=list)

    @property
    def violations(self) -> list[CertificationRow]:
        return [row for row in self.rows if not row.passed]

    @property
    def passed(self) -> bool:
        return not self.violations

    def raise_for_violation(self) -> None:
        for row in self.violations:
            if row.dist_sq < row.bound:
                raise CertificationError(row.k, "distance %.6e below bound %.6e" % (row.dist_sq, row.bound))

            raise CertificationError(row.k, "%d nonzero coordinates after %d rounds" % (row.support, row.comm_rounds))


def support_size(x: StackedPoint) -> int:
    return int((absolute(x.blocks) > SUPPORT_THRESHOLD).sum(axis=1).max())


def certify_bound(inst: LowerBoundInstance, trace: Trace, x_star: StackedPoint) -> CertificationReport:
    """ Checks every kept iterate of a run started at zero against the
    distance lower bound and the one-coordinate-per-round support growth """

    assert len(trace.iterates) == len(trace.rows), "run the solver with keep_iterates"
    assert trace.iterates and trace.iterates[0].norm_sq() == 0, "the run must start at zero"

    base = max(0.0, gamma_floor(inst.mu, inst.lam, inst.L))
    start = (trace.iterates[0] - x_star).norm_sq()

    report = CertificationReport()

    for row, x in zip(trace.rows, trace.iterates):
        bound = 0.25 * base ** (row.comm_rounds + 1) * start

        report.rows.append(CertificationRow(
            row.k, row.comm_rounds, (x - x_star).norm_sq(), bound, support_size(x)))

    return report

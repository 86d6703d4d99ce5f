from logging import info

from numpy import ndarray
from numpy.linalg import norm

from perfl.core.client_pool import ClientPool
from perfl.core.objective import objective_grad
from perfl.core.objective import objective_value
from perfl.core.oracle_ledger import OracleLedger
from perfl.core.problem import Problem
from perfl.core.stacked_point import StackedPoint
from perfl.core.stop_criterion import StopCriterion
from perfl.core.utility import spawn_streams
from perfl.losses.local_loss import PROX_TOL
from perfl.solvers.reference import Reference
from perfl.solvers.solver_run import SolverRun
from perfl.solvers.trace import Trace
from perfl.solvers.trace_row import TraceRow


class Solver(object):
    """ Shared loop of every solver.

    Subclasses prepare their state in on_start and advance it in
    on_iteration; both return the reported iterate. A trace row is taken
    at k = 0 and after every iteration that communicated. """

    PARAMETERS: frozenset = frozenset()
    """ method_params keys this solver reads """

    def __init__(self, problem: Problem, run: SolverRun, ledger: OracleLedger = None,
                 reference: Reference = None, pool: ClientPool = None) -> None:
        run.validate(self.PARAMETERS)

        assert run.x0.n == problem.n and run.x0.d == problem.d

        self.problem = problem
        self.config = run
        self.ledger = ledger or OracleLedger()
        self.reference = reference or Reference()
        self.pool = pool or ClientPool()

        self.client_streams, self.coordinator = spawn_streams(run.seed, problem.n)

    def on_start(self) -> StackedPoint:
        raise NotImplementedError("on_start: %s" % self.config.method.label)

    def on_iteration(self, k: int) -> StackedPoint:
        raise NotImplementedError("on_iteration: %s" % self.config.method.label)

    def run(self) -> Trace:
        info("%s on %s, params %s", self.config.method.label, self.problem, self.config.params)

        trace = Trace(self.config.method, self.reference)

        with self.pool:
            x = self.on_start()

            self._start_value = objective_value(self.problem, x)
            self._last_measure = float("inf")
            self.record(trace, 0, x)

            k = 0
            while not self.finished(k):
                before = self.ledger.comm_rounds

                x = self.on_iteration(k)
                k += 1

                if self.ledger.comm_rounds > before:
                    self.record(trace, k, x)

        trace.final = x
        trace.iterations = k

        info("%s stopped after %d iterations, %s", self.config.method.label, k, self.ledger)

        return trace

    def finished(self, k: int) -> bool:
        if self.ledger.comm_rounds >= self.config.max_comm:
            return True

        if self.config.max_iter is not None and k >= self.config.max_iter:
            return True

        return self.config.target > 0 and self._last_measure <= self.config.target

    def record(self, trace: Trace, k: int, x: StackedPoint) -> None:
        rel_subopt = float("nan")
        dist_sq = float("nan")

        f_star = self.reference.f_star
        x_star = self.reference.x_star

        if f_star is not None:
            gap = self._start_value - f_star
            rel_subopt = max((objective_value(self.problem, x) - f_star) / gap, 0.0) if gap > 0 else 0.0

        if x_star is not None:
            dist_sq = (x - x_star).norm_sq()

        row = TraceRow(
            k,
            self.ledger.comm_rounds,
            self.ledger.grad_calls,
            self.ledger.prox_calls,
            self.ledger.summand_grad_calls,
            rel_subopt,
            dist_sq,
        )

        trace.append(row, x.copy() if self.config.keep_iterates else None)

        if self.config.stop_on == StopCriterion.GRADIENT_NORM:
            self._last_measure = float(norm(objective_grad(self.problem, x).blocks))
        else:
            self._last_measure = trace.measure(row, self.config.stop_on)

    # local oracles, charged as one unit when every client calls them

    def local_gradients(self, points: ndarray) -> ndarray:
        losses = self.problem.losses

        grads = self.pool.map(lambda i: losses[i].grad(points[i]), self.problem.n)
        self.ledger.charge_grad()

        return StackedPoint(grads).blocks

    def local_proxes(self, center: ndarray, tol: float = PROX_TOL) -> ndarray:
        """ prox_{f_i/lambda}(center) on every client """

        losses = self.problem.losses
        beta = 1 / self.problem.lam

        solutions = self.pool.map(lambda i: losses[i].prox(beta, center, tol), self.problem.n)
        self.ledger.charge_prox()

        return StackedPoint(solutions).blocks

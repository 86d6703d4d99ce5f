from logging import debug

from numpy import ndarray

from perfl.core.errors import ParameterError
from perfl.core.local_work import LocalWork
from perfl.core.objective import objective_value
from perfl.core.stacked_point import StackedPoint
from perfl.solvers.apgd1 import Apgd1
from perfl.solvers.schedules import agd_iterations
from perfl.solvers.schedules import katyusha_iterations
from perfl.solvers.schedules import katyusha_theory_iterations
from perfl.subsolvers.local_subproblem import LocalSubproblem
from perfl.subsolvers.subsolver import Subsolver
from perfl.subsolvers.subsolver_kind import SubsolverKind


class Iapgd(Apgd1):
    """ Apgd1 with the local prox replaced by T_k iterations of an inner
    solver, warm-started at the client's current momentum point """

    KIND = SubsolverKind.AGD

    PARAMETERS = frozenset({"iters"})

    def check(self) -> None:
        super().check()
        self.problem.require_lambda_at_least(2.0, self.config.method.label)

        iters = self.config.param("iters")
        if iters is not None and int(iters) < 1:
            raise ParameterError("iters must be at least 1, got %r" % iters)

    def inner_iterations(self, k: int) -> int:
        c = self.problem.constants
        return agd_iterations(k, c.L, self.problem.lam, c.mu, self.problem.n)

    def local_step(self, k: int, center: ndarray) -> ndarray:
        iters = self.config.param("iters")
        iters = int(iters) if iters is not None else self.inner_iterations(k)

        debug("outer step %d: %d inner iterations", k, iters)

        losses = self.problem.losses
        lam = self.problem.lam
        constants = self.problem.constants
        streams = self.client_streams

        def solve(i: int):
            h = LocalSubproblem(losses[i], lam, center, constants)
            return Subsolver(self.KIND, iters, streams[i]).solve(h, self.y[i])

        results = self.pool.map(solve, self.problem.n)
        self.ledger.charge(LocalWork.parallel([work for _, work in results]))

        return StackedPoint([z for z, _ in results]).blocks


class IapgdAgd(Iapgd):
    pass


class IapgdKatyusha(Iapgd):
    """ Inner Katyusha on each client's finite sum; the practical budget is
    the default, the theoretical one needs F* through `f_star` or the reference """

    KIND = SubsolverKind.KATYUSHA

    PARAMETERS = frozenset({"iters", "schedule", "f_star"})

    SCHEDULES = ("practical", "theory")

    def check(self) -> None:
        super().check()

        schedule = self.config.param("schedule", "practical")
        if schedule not in self.SCHEDULES:
            raise ParameterError("schedule must be one of %s, got %r" % (self.SCHEDULES, schedule))

        if schedule == "theory" and self.config.param("f_star", self.reference.f_star) is None:
            raise ParameterError("the theory schedule needs f_star")

    def on_start(self) -> StackedPoint:
        x = super().on_start()

        f_star = self.config.param("f_star", self.reference.f_star)
        self.gap0 = objective_value(self.problem, x) - f_star if f_star is not None else None

        return x

    def inner_iterations(self, k: int) -> int:
        c = self.problem.constants
        lam = self.problem.lam

        if self.config.param("schedule", "practical") == "theory":
            return katyusha_theory_iterations(k, c.L_tilde, lam, c.mu, c.m, max(self.gap0, 0.0))

        return katyusha_iterations(k, c.L, lam, c.mu, c.m)

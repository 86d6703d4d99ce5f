from logging import info

from perfl.core.objective import objective_value
from perfl.core.problem import Problem
from perfl.core.quadratic_optimum import quadratic_optimum
from perfl.core.solver_method import SolverMethod
from perfl.core.stacked_point import StackedPoint
from perfl.core.stop_criterion import StopCriterion
from perfl.solvers.apgd1 import Apgd1
from perfl.solvers.reference import Reference
from perfl.solvers.solver_run import SolverRun


# prox tolerance of the reference run
REFERENCE_PROX_TOL = 1e-12

# |grad F| at which the reference run is considered converged
REFERENCE_GRADIENT_NORM = 1e-11


def exact_reference(problem: Problem) -> Reference:
    """ Optimum of a quadratic problem by one linear solve """

    x_star = quadratic_optimum(problem)
    return Reference(objective_value(problem, x_star), x_star, "linear solve")


def apgd1_reference(problem: Problem, max_comm: int, x0: StackedPoint = None) -> Reference:
    """ Optimum of a general problem by a long Apgd1 run with a tight prox """

    run = SolverRun(
        SolverMethod.APGD1,
        x0 if x0 is not None else problem.zeros(),
        max_comm,
        target=REFERENCE_GRADIENT_NORM,
        params={"prox_tol": REFERENCE_PROX_TOL},
        stop_on=StopCriterion.GRADIENT_NORM,
    )

    trace = Apgd1(problem, run).run()
    x_star = trace.final

    info("reference run used %d rounds", trace.last.comm_rounds)

    return Reference(objective_value(problem, x_star), x_star, "apgd1 reference, %d rounds" % trace.last.comm_rounds)


def reference_for(problem: Problem, budget: int) -> Reference:
    if problem.is_quadratic():
        return exact_reference(problem)

    return apgd1_reference(problem, 10 * budget)

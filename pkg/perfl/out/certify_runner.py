from logging import error
from logging import info

from perfl.core.errors import ConfigError
from perfl.core.errors import ParameterError
from perfl.core.objective import objective_value
from perfl.core.solver_method import SolverMethod
from perfl.lowerbound.certificate import CertificationReport
from perfl.lowerbound.certificate import certify_bound
from perfl.lowerbound.lower_bound_instance import LowerBoundInstance
from perfl.lowerbound.lower_bound_instance import build_instance
from perfl.lowerbound.optimum import exact_optimum
from perfl.out.experiment_config import ExperimentConfig
from perfl.out.experiment_config import resolve
from perfl.out.instance_file import save_instance
from perfl.solvers.reference import Reference
from perfl.solvers.registry import solve
from perfl.solvers.solver_run import SolverRun


# solvers whose iterates stay in the span the bound argues about
DETERMINISTIC = (SolverMethod.PGD1, SolverMethod.PGD2, SolverMethod.APGD1, SolverMethod.APGD2)


class CertifyRunner(object):
    """ Builds the lower-bound instance of a config and checks every
    deterministic method's trace against it """

    config: ExperimentConfig

    instance: LowerBoundInstance = None

    reports: dict
    """ SolverMethod -> CertificationReport """

    def __init__(self, config: ExperimentConfig) -> None:
        if len(config.lambdas) != 1:
            raise ConfigError("certify-lb takes a single lambda, got %d" % len(config.lambdas))

        self.config = config
        self.reports = {}

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports.values())

    def run(self) -> dict:
        config = self.config

        self.instance = build_instance(config.clients, config.T, config.mu, config.L, resolve(config.lambdas[0], 1))
        problem = self.instance.problem

        if config.export is not None:
            save_instance(problem, config.export)
            info("instance written to %s", config.export)

        x_star, ratio = exact_optimum(self.instance)
        info("optimum decays at %.12g per coordinate, gamma=%.12g", ratio, self.instance.gamma)

        reference = Reference(objective_value(problem, x_star), x_star, "linear solve")

        # past T rounds the truncated chain no longer carries enough mass for the bound
        horizon = min(config.max_comm, self.instance.T)
        if horizon < config.max_comm:
            info("certifying %d rounds instead of %d", horizon, config.max_comm)

        for method in config.methods:
            if method not in DETERMINISTIC:
                error("%s skipped: only deterministic methods are certified", method.label)
                continue

            run = SolverRun(method, problem.zeros(), horizon, seed=config.seed,
                            params=config.params_for(method, 1), keep_iterates=True)

            try:
                trace = solve(problem, run, reference=reference)
            except ParameterError as e:
                error("%s skipped: %s", method.label, e)
                continue

            self.reports[method] = certify_bound(self.instance, trace, x_star)

        return self.reports


def format_report(method: SolverMethod, report: CertificationReport) -> list[str]:
    lines = []

    for row in report.rows:
        lines.append("%s k=%d C=%d dist_sq=%.6e bound=%.6e ratio=%.6g support=%d/%d %s" % (
            method.label, row.k, row.comm_rounds, row.dist_sq, row.bound, row.ratio,
            row.support, row.support_limit, "PASS" if row.passed else "FAIL"))

    lines.append("%s: %s" % (method.label, "PASS" if report.passed else "FAIL, %d violations" % len(report.violations)))

    return lines

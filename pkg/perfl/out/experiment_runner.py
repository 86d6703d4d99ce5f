from logging import error
from logging import info
from pathlib import Path

from perfl.core.client_pool import ClientPool
from perfl.core.errors import ParameterError
from perfl.core.oracle_ledger import OracleLedger
from perfl.solvers.optimum_reference import reference_for
from perfl.solvers.registry import solve
from perfl.solvers.solver_run import SolverRun
from perfl.solvers.trace import Trace
from perfl.out.experiment_config import ExperimentConfig
from perfl.out.problem_factory import ProblemCase
from perfl.out.problem_factory import build_cases
from perfl.out.trace_writer import SummaryRow
from perfl.out.trace_writer import write_comm_to_target
from perfl.out.trace_writer import write_summary
from perfl.out.trace_writer import write_trace


class ExperimentRunner(object):
    """ Runs every configured method on every lambda and writes one trace
    per method, a summary and, for a lambda grid, comm_to_target.csv """

    config: ExperimentConfig

    summary: list[SummaryRow]

    traces: dict
    """ (lambda, SolverMethod) -> Trace """

    def __init__(self, config: ExperimentConfig, threads: int = None) -> None:
        self.config = config
        self.threads = threads

        self.summary = []
        self.traces = {}

    @property
    def is_grid(self) -> bool:
        return len(self.config.lambdas) > 1

    def directory_for(self, case: ProblemCase) -> Path:
        if not self.is_grid:
            return self.config.output

        return self.config.output / ("lambda_%g" % case.lam)

    def run(self) -> list[SummaryRow]:
        config = self.config
        config.output.mkdir(parents=True, exist_ok=True)

        for case in build_cases(config):
            directory = self.directory_for(case)
            directory.mkdir(parents=True, exist_ok=True)

            reference = reference_for(case.problem, config.max_comm)
            info("lambda=%g: F*=%r from %s", case.lam, reference.f_star, reference.source)

            for method in config.methods:
                run = SolverRun(
                    method,
                    case.problem.zeros(),
                    config.max_comm,
                    target=config.target,
                    seed=config.seed,
                    params=config.params_for(method, case.problem.m),
                    stop_on=config.stop_on,
                )

                ledger = OracleLedger()

                try:
                    trace = solve(case.problem, run, ledger, reference, ClientPool(self.threads))
                except ParameterError as e:
                    error("%s skipped at lambda=%g: %s", method.label, case.lam, e)
                    continue

                write_trace(trace, directory / ("%s.csv" % method.label))

                self.traces[case.lam, method] = trace
                self.summary.append(self.summarize(case, trace, ledger))

        write_summary(self.summary, config.output / "summary.csv")

        if self.is_grid:
            write_comm_to_target(self.summary, config.output / "comm_to_target.csv")

        return self.summary

    def summarize(self, case: ProblemCase, trace: Trace, ledger: OracleLedger) -> SummaryRow:
        last = trace.last

        reached = None
        if self.config.target > 0:
            reached = trace.comm_to_target(self.config.target, self.config.stop_on)

        return SummaryRow(
            case.lam,
            trace.method.label,
            trace.reference.f_star,
            trace.reference.source,
            trace.iterations,
            ledger.comm_rounds,
            ledger.grad_calls,
            ledger.prox_calls,
            ledger.summand_grad_calls,
            ledger.summand_equivalent(case.problem.m),
            last.rel_subopt,
            reached,
        )

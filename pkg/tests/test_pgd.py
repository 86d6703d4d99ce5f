from unittest import TestCase

from perfl.core.errors import ParameterError
from perfl.core.oracle_ledger import OracleLedger
from perfl.core.solver_method import SolverMethod
from perfl.data.synthetic import random_quadratic_problem
from perfl.solvers.optimum_reference import exact_reference
from perfl.solvers.registry import solve
from perfl.solvers.solver_run import SolverRun


class TestPgd(TestCase):

    def setUp(self):
        self.problem = random_quadratic_problem(4, 5, 0.1, 1.0, 1.0, seed=0)
        self.reference = exact_reference(self.problem)

    def run_method(self, method: SolverMethod, max_comm: int, **values):
        ledger = OracleLedger()
        run = SolverRun(method, self.problem.zeros(), max_comm, **values)

        return solve(self.problem, run, ledger, self.reference), ledger

    def test_pgd1_converges(self):
        trace, _ = self.run_method(SolverMethod.PGD1, 200)
        self.assertLess(trace.last.rel_subopt, 1e-6)

    def test_pgd2_converges(self):
        trace, _ = self.run_method(SolverMethod.PGD2, 300)
        self.assertLess(trace.last.rel_subopt, 1e-6)

    def test_pgd1_accounting(self):
        trace, ledger = self.run_method(SolverMethod.PGD1, 25)

        self.assertEqual(len(trace.rows), 26)
        self.assertEqual(trace.iterations, 25)

        for row in trace.rows:
            self.assertEqual(row.comm_rounds, row.k)
            self.assertEqual(row.prox_calls, row.k)
            self.assertEqual(row.grad_calls, 0)
            self.assertEqual(row.summand_grad_calls, 0)

        self.assertEqual(ledger.comm_rounds, 25)

    def test_pgd2_accounting(self):
        trace, _ = self.run_method(SolverMethod.PGD2, 25)

        for row in trace.rows:
            self.assertEqual(row.comm_rounds, row.k)
            self.assertEqual(row.grad_calls, row.k)
            self.assertEqual(row.prox_calls, 0)

    def test_zero_budget(self):
        for method in (SolverMethod.PGD1, SolverMethod.PGD2, SolverMethod.APGD1, SolverMethod.APGD2):
            trace, _ = self.run_method(method, 0)

            self.assertEqual(len(trace.rows), 1)
            self.assertEqual(trace.rows[0].k, 0)
            self.assertEqual(trace.rows[0].rel_subopt, 1.0)

    def test_monotone_pgd1(self):
        trace, _ = self.run_method(SolverMethod.PGD1, 50)
        values = [row.rel_subopt for row in trace.rows]

        for before, after in zip(values, values[1:]):
            self.assertLessEqual(after, before + 1e-12)

    def test_pgd1_needs_lambda(self):
        self.problem = self.problem.with_lambda(0.0)
        self.reference = None

        with self.assertRaises(ParameterError):
            self.run_method(SolverMethod.PGD1, 5)

    def test_unknown_parameter(self):
        with self.assertRaises(ParameterError):
            self.run_method(SolverMethod.PGD2, 5, params={"p": 0.5})

    def test_target_stops_early(self):
        trace, _ = self.run_method(SolverMethod.PGD1, 1000, target=1e-3)

        self.assertLessEqual(trace.last.rel_subopt, 1e-3)
        self.assertGreater(trace.rows[-2].rel_subopt, 1e-3)
        self.assertEqual(trace.comm_to_target(1e-3), trace.last.comm_rounds)

    def test_iterates_kept_on_request(self):
        trace, _ = self.run_method(SolverMethod.PGD2, 5, keep_iterates=True)

        self.assertEqual(len(trace.iterates), len(trace.rows))
        self.assertEqual(trace.iterates[0].norm_sq(), 0.0)
        self.assertEqual(trace.iterates[-1], trace.final)

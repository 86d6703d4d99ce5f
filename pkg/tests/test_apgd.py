from unittest import TestCase

from perfl.core.errors import ParameterError
from perfl.core.objective import objective_value
from perfl.core.solver_method import SolverMethod
from perfl.core.stacked_point import StackedPoint
from perfl.data.synthetic import random_quadratic_problem
from perfl.solvers.apgd1 import apgd1_momentum
from perfl.solvers.apgd2 import apgd2_momentum
from perfl.solvers.envelopes import apgd1_envelope
from perfl.solvers.envelopes import apgd2_envelope
from perfl.solvers.optimum_reference import exact_reference
from perfl.solvers.pgd2 import penalty_prox
from perfl.solvers.registry import solve
from perfl.solvers.solver_run import SolverRun


class TestApgd(TestCase):

    def setUp(self):
        self.problem = random_quadratic_problem(8, 10, 1e-2, 1.0, 1.0, seed=0)
        self.reference = exact_reference(self.problem)

        self.x0 = self.problem.zeros()
        self.gap0 = objective_value(self.problem, self.x0) - self.reference.f_star
        self.dist0_sq = (self.x0 - self.reference.x_star).norm_sq()

    def gaps(self, method: SolverMethod, max_comm: int) -> list[float]:
        run = SolverRun(method, self.x0, max_comm, keep_iterates=True)
        trace = solve(self.problem, run, reference=self.reference)

        return [objective_value(self.problem, x) - self.reference.f_star for x in trace.iterates]

    def test_apgd1_envelope(self):
        c = self.problem.constants

        for k, gap in enumerate(self.gaps(SolverMethod.APGD1, 200)):
            bound = apgd1_envelope(k, self.problem.lam, c.mu, self.problem.n, self.gap0, self.dist0_sq)
            self.assertLessEqual(gap, bound * (1 + 1e-9) + 1e-15, "k=%d" % k)

    def test_apgd2_envelope(self):
        c = self.problem.constants

        for k, gap in enumerate(self.gaps(SolverMethod.APGD2, 200)):
            bound = apgd2_envelope(k, c.L, c.mu, self.problem.n, self.gap0, self.dist0_sq)
            self.assertLessEqual(gap, bound * (1 + 1e-9) + 1e-15, "k=%d" % k)

    def test_acceleration_beats_plain(self):
        for fast, slow in ((SolverMethod.APGD1, SolverMethod.PGD1), (SolverMethod.APGD2, SolverMethod.PGD2)):
            self.assertLess(self.gaps(fast, 100)[-1], self.gaps(slow, 100)[-1])

    def test_momentum(self):
        self.assertEqual(apgd1_momentum(1.0, 1.0), 0.0)
        self.assertAlmostEqual(apgd1_momentum(4.0, 1.0), 1 / 3)
        self.assertAlmostEqual(apgd2_momentum(9.0, 1.0), 0.5)

    def test_penalty_prox(self):
        stepped = StackedPoint([[1.0], [3.0]]).blocks
        center = stepped.mean(axis=0)

        blended = penalty_prox(stepped, center, 1.0, 1.0)

        self.assertEqual(blended.tolist(), [[1.5], [2.5]])
        self.assertEqual(blended.mean(axis=0).tolist(), center.tolist())

    def test_apgd1_needs_lambda_above_mu(self):
        problem = self.problem.with_lambda(1e-3)

        with self.assertRaises(ParameterError):
            solve(problem, SolverRun(SolverMethod.APGD1, self.x0, 5))

    def test_apgd2_runs_at_small_lambda(self):
        problem = self.problem.with_lambda(1e-3)
        reference = exact_reference(problem)

        trace = solve(problem, SolverRun(SolverMethod.APGD2, self.x0, 400), reference=reference)
        self.assertLess(trace.last.rel_subopt, 1e-4)

    def test_envelopes_at_zero(self):
        self.assertEqual(apgd1_envelope(0, 1.0, 0.5, 2, 3.0, 4.0), 3.0 + 0.5 / 4 * 4.0)
        self.assertLess(apgd2_envelope(10, 1.0, 0.5, 2, 3.0, 4.0), apgd2_envelope(9, 1.0, 0.5, 2, 3.0, 4.0))

from math import ceil
from math import sqrt
from unittest import TestCase

from numpy import diag
from numpy import geomspace
from numpy import median
from numpy import zeros
from numpy.linalg import norm
from numpy.random import default_rng
from numpy.testing import assert_allclose

from perfl.core.errors import ParameterError
from perfl.core.errors import SubsolverError
from perfl.core.local_work import LocalWork
from perfl.core.loopless_parameters import LooplessParameters
from perfl.losses.finite_sum_quadratic_loss import FiniteSumQuadraticLoss
from perfl.losses.logistic_loss import LogisticLoss
from perfl.subsolvers.agd import agd_minimize
from perfl.subsolvers.agd import agd_solve
from perfl.subsolvers.agd import check_descent
from perfl.subsolvers.agd import momentum
from perfl.subsolvers.katyusha import katyusha_parameters
from perfl.subsolvers.katyusha import katyusha_solve
from perfl.subsolvers.local_subproblem import LocalSubproblem
from perfl.subsolvers.subsolver import Subsolver
from perfl.subsolvers.subsolver_kind import SubsolverKind


def finite_sum(m: int, d: int, seed: int) -> FiniteSumQuadraticLoss:
    rng = default_rng(seed)
    G = rng.standard_normal((m, d, d))

    return FiniteSumQuadraticLoss(G @ G.transpose(0, 2, 1) / d, rng.standard_normal((m, d)), 0.1)


def separable(seed: int) -> FiniteSumQuadraticLoss:
    """ m = 4 diagonal summands in two dimensions """

    rng = default_rng(seed)

    return FiniteSumQuadraticLoss([diag(v) for v in rng.uniform(0.5, 2.0, (4, 2))], rng.standard_normal((4, 2)), 0.1)


class TestSubsolvers(TestCase):

    def setUp(self):
        self.loss = finite_sum(4, 5, 0)
        self.center = default_rng(1).standard_normal(5)
        self.h = LocalSubproblem(self.loss, 1.0, self.center)

        # the exact minimizer of h is the prox with beta = 1/lam
        self.solution = self.loss.prox(1.0, self.center)

    def test_subproblem_constants(self):
        c = self.loss.constants

        self.assertAlmostEqual(self.h.mu, c.mu + 1.0)
        self.assertAlmostEqual(self.h.smoothness, c.L + 1.0)
        self.assertAlmostEqual(self.h.summand_smoothness, c.L_tilde + 1.0)
        self.assertEqual(self.h.m, 4)

    def test_momentum(self):
        self.assertEqual(momentum(1.0), 0.0)
        self.assertAlmostEqual(momentum(9.0), 0.5)

    def test_agd_converges(self):
        z, work = agd_solve(self.h, zeros(5), 300)

        assert_allclose(z, self.solution, atol=1e-10)
        self.assertEqual(work, LocalWork(grad_calls=300))

    def test_agd_needs_an_iteration(self):
        with self.assertRaises(ParameterError):
            agd_solve(self.h, zeros(5), 0)

    def test_agd_minimize(self):
        z, residual, iterations = agd_minimize(self.h, zeros(5), 1e-11)

        self.assertLessEqual(residual, 1e-11)
        self.assertGreater(iterations, 0)
        self.assertEqual(iterations % 10, 0)
        assert_allclose(z, self.solution, atol=1e-9)

    def test_agd_minimize_at_solution(self):
        _, residual, iterations = agd_minimize(self.h, self.solution, 1e-8)

        self.assertEqual(iterations, 0)
        self.assertLessEqual(residual, 1e-8)

    def test_descent_check(self):
        with self.assertRaises(SubsolverError):
            check_descent(self.h, self.solution, self.solution + 1.0)

    def test_katyusha_converges(self):
        z, work = katyusha_solve(self.h, zeros(5), 3000, default_rng(2))

        self.assertLess(norm(z - self.solution), 1e-6 * max(1.0, norm(self.solution)))
        self.assertEqual(work.summand_grad_calls, 6000)
        self.assertGreaterEqual(work.grad_calls, 1)
        self.assertEqual(work.prox_calls, 0)

    def test_katyusha_divergence_raises(self):
        params = katyusha_parameters(self.h).override(eta=100.0)

        with self.assertRaises(SubsolverError):
            katyusha_solve(self.h, zeros(5), 200, default_rng(7), params)

    def test_katyusha_stays_at_the_minimizer(self):
        z, _ = katyusha_solve(self.h, self.solution, 200, default_rng(8))

        self.assertLessEqual(norm(z - self.solution), 1e-10)

    def test_katyusha_on_separable_quadratics(self):
        gaps = []

        for seed in range(20):
            loss = separable(seed)
            center = default_rng(seed + 100).standard_normal(2)
            h = LocalSubproblem(loss, 1.0, center)

            z, _ = katyusha_solve(h, zeros(2), 500, default_rng(seed))
            gaps.append(h.value(z) - h.value(loss.prox(1.0, center)))

        self.assertLessEqual(median(gaps), 1e-8)

    def test_katyusha_with_one_summand_decays_like_agd(self):
        rng = default_rng(5)
        loss = FiniteSumQuadraticLoss(diag(geomspace(0.01, 1.0, 5))[None], rng.standard_normal((1, 5)))
        center = rng.standard_normal(5)
        h = LocalSubproblem(loss, 0.01, center)

        h_star = h.value(loss.prox(100.0, center))
        target = 1e-10 * (h.value(zeros(5)) - h_star)

        def first_hit(run) -> int:
            T = 10
            while h.value(run(T)) - h_star > target and T < 20000:
                T = ceil(1.1 * T)

            return T

        agd = first_hit(lambda T: agd_solve(h, zeros(5), T)[0])
        katyusha = first_hit(lambda T: katyusha_solve(h, zeros(5), T, default_rng(0))[0])

        self.assertLess(agd, 20000)
        self.assertLessEqual(katyusha, 10 * agd)

    def test_agd_envelope(self):
        h_star = self.h.value(self.solution)
        rate = 1 - sqrt(self.h.mu / self.h.smoothness)
        scale = self.h.smoothness * norm(self.solution) ** 2

        for T in range(1, 201):
            z, _ = agd_solve(self.h, zeros(5), T)

            self.assertLessEqual(self.h.value(z) - h_star, rate ** T * scale + 1e-12)

    def test_katyusha_is_reproducible(self):
        a, _ = katyusha_solve(self.h, zeros(5), 50, default_rng(3))
        b, _ = katyusha_solve(self.h, zeros(5), 50, default_rng(3))

        assert_allclose(a, b, rtol=0, atol=0)

    def test_katyusha_on_logistic(self):
        rng = default_rng(4)
        loss = LogisticLoss(rng.standard_normal((6, 3)), rng.choice((-1.0, 1.0), 6), 1e-2)
        h = LocalSubproblem(loss, 2.0, rng.standard_normal(3))

        exact = loss.prox(0.5, h.center, 1e-12)
        z, _ = katyusha_solve(h, zeros(3), 2000, default_rng(5))

        self.assertLess(norm(z - exact), 1e-6)

    def test_subsolver_dispatch(self):
        z, work = Subsolver(SubsolverKind.AGD, 200).solve(self.h, zeros(5))
        assert_allclose(z, self.solution, atol=1e-9)
        self.assertEqual(work.grad_calls, 200)

        _, work = Subsolver(SubsolverKind.KATYUSHA, 10, default_rng(6)).solve(self.h, zeros(5))
        self.assertEqual(work.summand_grad_calls, 20)

    def test_subsolver_validation(self):
        with self.assertRaises(ParameterError):
            Subsolver(SubsolverKind.AGD, 0)

        with self.assertRaises(ParameterError):
            Subsolver(SubsolverKind.KATYUSHA, 5)

    def test_loopless_parameters(self):
        params = LooplessParameters.from_constants(2.0, 4.0, 0.01, 0.25)

        self.assertAlmostEqual(params.eta, 1 / 16)
        self.assertAlmostEqual(params.theta2, 0.5)
        self.assertLessEqual(params.theta1 + params.theta2, 1.0)
        self.assertAlmostEqual(params.beta, 1 - params.gamma * 0.01)

        with self.assertRaises(ParameterError):
            LooplessParameters.from_constants(1.0, 1.0, 0.1, 0.0)

        with self.assertRaises(ParameterError):
            params.override(theta1=0.9)

        self.assertEqual(params.override(eta=None), params)
        self.assertEqual(params.override(eta=0.01).eta, 0.01)

    def test_parallel_work(self):
        work = LocalWork.parallel([LocalWork(3, 10), LocalWork(5, 2), LocalWork(1, 7, 1)])

        self.assertEqual(work, LocalWork(5, 10, 1))

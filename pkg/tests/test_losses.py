from unittest import TestCase

from numpy import array
from numpy import eye
from numpy import mean
from numpy.linalg import norm
from numpy.random import default_rng
from numpy.testing import assert_allclose

from perfl.core.errors import ParameterError
from perfl.core.utility import central_difference
from perfl.losses.finite_sum_quadratic_loss import FiniteSumQuadraticLoss
from perfl.losses.logistic_loss import LogisticLoss
from perfl.losses.quadratic_loss import QuadraticLoss


def random_logistic(m: int, d: int, seed: int, reg: float = 1e-2) -> LogisticLoss:
    rng = default_rng(seed)
    return LogisticLoss(rng.standard_normal((m, d)), rng.choice((-1.0, 1.0), m), reg)


def random_finite_sum(m: int, d: int, seed: int) -> FiniteSumQuadraticLoss:
    rng = default_rng(seed)
    G = rng.standard_normal((m, d, d))

    return FiniteSumQuadraticLoss(G @ G.transpose(0, 2, 1) / d, rng.standard_normal((m, d)), 0.1)


class TestLosses(TestCase):

    def check_gradient(self, loss, seed: int):
        rng = default_rng(seed)

        for _ in range(50):
            z = rng.standard_normal(loss.dim)
            numeric = central_difference(loss.value, z)

            self.assertLessEqual(norm(loss.grad(z) - numeric) / max(norm(numeric), 1e-12), 1e-5)

    def check_prox(self, loss, beta: float, seed: int, tol: float):
        v = default_rng(seed).standard_normal(loss.dim)
        z = loss.prox(beta, v)

        self.assertLessEqual(norm(loss.grad(z) + (z - v) / beta), tol)

    def test_quadratic_gradient(self):
        rng = default_rng(0)
        G = rng.standard_normal((5, 5))

        self.check_gradient(QuadraticLoss(G @ G.T, rng.standard_normal(5), 0.5), 1)

    def test_logistic_gradient(self):
        self.check_gradient(random_logistic(8, 5, 2), 3)

    def test_finite_sum_gradient(self):
        self.check_gradient(random_finite_sum(4, 3, 4), 5)

    def test_summands_average_to_gradient(self):
        z = default_rng(6).standard_normal(5)

        for loss in (random_logistic(7, 5, 7), random_finite_sum(4, 5, 8)):
            average = mean([loss.summand_grad(j, z) for j in range(loss.m)], axis=0)
            assert_allclose(average, loss.grad(z), atol=1e-12)

    def test_summand_index(self):
        loss = random_logistic(3, 2, 9)

        with self.assertRaises(IndexError):
            loss.summand_grad(3, array([0.0, 0.0]))

        with self.assertRaises(IndexError):
            QuadraticLoss(eye(2), [0.0, 0.0]).summand_grad(1, array([0.0, 0.0]))

    def test_quadratic_prox_is_exact(self):
        self.check_prox(QuadraticLoss(eye(3) * 2, [1.0, 0.0, -1.0], 0.1), 0.5, 10, 1e-12)

    def test_logistic_prox(self):
        self.check_prox(random_logistic(10, 4, 11), 2.0, 12, 1e-9)

    def test_prox_is_nonexpansive(self):
        rng = default_rng(18)
        G = rng.standard_normal((4, 4))

        for loss, slack in ((QuadraticLoss(G @ G.T, rng.standard_normal(4), 0.1), 1e-12),
                            (random_logistic(10, 4, 19), 1e-8)):
            for _ in range(20):
                v = rng.standard_normal(4)
                w = rng.standard_normal(4)

                self.assertLessEqual(norm(loss.prox(0.7, v) - loss.prox(0.7, w)), norm(v - w) + slack)

    def test_logistic_prox_matches_gradient_descent(self):
        loss = random_logistic(10, 4, 20)
        beta = 2.0
        v = default_rng(21).standard_normal(4)

        step = 1 / (loss.constants.L + 1 / beta)
        z = v.copy()

        for _ in range(5000):
            z = z - step * (loss.grad(z) + (z - v) / beta)

        self.assertLessEqual(norm(loss.prox(beta, v) - z), 1e-6)

    def test_gradients_within_smoothness_constant(self):
        rng = default_rng(22)
        G = rng.standard_normal((4, 4))

        for loss in (QuadraticLoss(G @ G.T, rng.standard_normal(4), 0.1), random_logistic(12, 4, 23),
                     random_finite_sum(5, 4, 24)):
            L = loss.estimate_constants().L

            for _ in range(50):
                z = rng.standard_normal(4) * 3
                w = rng.standard_normal(4) * 3

                self.assertLessEqual(norm(loss.grad(z) - loss.grad(w)), L * norm(z - w) * (1 + 1e-9))

    def test_prox_rejects_bad_beta(self):
        with self.assertRaises(ParameterError):
            random_logistic(3, 2, 13).prox(0.0, array([1.0, 1.0]))

    def test_quadratic_validation(self):
        with self.assertRaises(ParameterError):
            QuadraticLoss([[1.0, 2.0], [0.0, 1.0]], [0.0, 0.0])

        with self.assertRaises(ParameterError):
            QuadraticLoss(eye(2), [0.0, 0.0, 0.0])

    def test_logistic_validation(self):
        with self.assertRaises(ParameterError):
            LogisticLoss([[1.0, 0.0]], [0.0])

        with self.assertRaises(ParameterError):
            LogisticLoss([[1.0, 0.0]], [1.0], reg=0.0)

    def test_quadratic_constants(self):
        c = QuadraticLoss(eye(3) * array([1.0, 2.0, 3.0]), [0.0, 0.0, 0.0], 0.5).constants

        self.assertAlmostEqual(c.mu, 1.5)
        self.assertAlmostEqual(c.L, 3.5)
        self.assertAlmostEqual(c.L_tilde, 3.5)
        self.assertEqual(c.m, 1)

    def test_logistic_constants(self):
        loss = random_logistic(20, 6, 14)
        c = loss.constants

        self.assertEqual(c.mu, loss.reg)
        self.assertEqual(c.m, 20)
        self.assertLessEqual(c.L, c.L_tilde)
        self.assertGreaterEqual(c.L * (1 + 1e-9), c.L_tilde / c.m)

    def test_logistic_curvature_below_constant(self):
        loss = random_logistic(12, 4, 15)
        rng = default_rng(16)

        for _ in range(20):
            z = rng.standard_normal(4)
            u = rng.standard_normal(4)
            t = 1e-4

            curvature = (loss.grad(z + t * u) - loss.grad(z)) @ u / (t * u @ u)
            self.assertLessEqual(curvature, loss.constants.L * (1 + 1e-3))
            self.assertGreaterEqual(curvature, loss.constants.mu * (1 - 1e-3))

    def test_finite_sum_constants(self):
        loss = random_finite_sum(5, 4, 17)
        c = loss.constants

        self.assertEqual(c.m, 5)
        self.assertLessEqual(c.L, c.L_tilde * (1 + 1e-9))
        self.assertGreaterEqual(c.mu, 0.1 * (1 - 1e-9))

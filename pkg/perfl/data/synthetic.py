from numpy import arange
from numpy import diag
from numpy import geomspace
from numpy import where
from numpy.random import default_rng
from scipy.linalg import qr

from perfl.core.problem import Problem
from perfl.data.dataset import Dataset
from perfl.losses.finite_sum_quadratic_loss import FiniteSumQuadraticLoss
from perfl.losses.quadratic_loss import QuadraticLoss


def random_quadratic_problem(n: int, d: int, mu: float, L: float, lam: float, seed: int = 0) -> Problem:
    """ Each client gets a random rotation of a spectrum spread
    geometrically over [mu, L] and a Gaussian linear term """

    rng = default_rng(seed)
    spectrum = geomspace(mu, L, d)

    losses = []
    for _ in range(n):
        Q, _ = qr(rng.standard_normal((d, d)))
        losses.append(QuadraticLoss(Q @ diag(spectrum) @ Q.T, rng.standard_normal(d)))

    return Problem(losses, lam)


def random_finite_sum_problem(n: int, d: int, m: int, mu: float, lam: float, seed: int = 0) -> Problem:
    """ Clients hold m random positive semidefinite quadratics plus a ridge mu """

    rng = default_rng(seed)

    losses = []
    for _ in range(n):
        G = rng.standard_normal((m, d, d))
        As = G @ G.transpose(0, 2, 1) / d
        losses.append(FiniteSumQuadraticLoss(As, rng.standard_normal((m, d)), mu))

    return Problem(losses, lam)


def synthetic_logistic_dataset(rows: int, d: int, seed: int = 0, decay: float = 0.8) -> Dataset:
    """ Stand-in for a LIBSVM binary dataset: Gaussian features whose scales
    decay geometrically, so the problem is ill-conditioned after row
    normalization, and labels from a noisy linear rule """

    rng = default_rng(seed)

    features = rng.standard_normal((rows, d)) * decay ** arange(d)
    truth = rng.standard_normal(d)
    margins = features @ truth + 0.3 * rng.standard_normal(rows)

    return Dataset(features, where(margins > 0, 1.0, -1.0))

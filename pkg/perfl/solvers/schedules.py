from math import ceil
from math import log
from math import sqrt


def whole_iterations(value: float) -> int:
    """ Ceil to an integer, at least one iteration """

    return max(1, ceil(value))


def agd_iterations(k: int, L: float, lam: float, mu: float, n: int) -> int:
    """ Inner AGD budget at outer step k that keeps the inexact method accelerated """

    kappa = (L + lam) / (mu + lam)
    ratio = sqrt(lam / mu)

    start = sqrt(kappa) * log(1152 * L * lam * n ** 2 * (2 * ratio + 1) ** 2 / mu ** 2)
    growth = 4 * sqrt(mu * (L + lam) / (lam * (mu + lam)))

    return whole_iterations(start + growth * k)


def katyusha_iterations(k: int, L: float, lam: float, mu: float, m: int) -> int:
    """ Practical inner Katyusha budget, a constant factor below the theory """

    start = sqrt(m * (L + lam) / (mu + lam))
    growth = sqrt(m * mu * (L + lam) / (lam * (mu + lam)))

    return whole_iterations(start + growth * k)


def katyusha_theory_iterations(k: int, L_tilde: float, lam: float, mu: float, m: int, gap0: float) -> int:
    """ Inner Katyusha budget from the convergence theory; needs F(x^0) - F* """

    ratio = sqrt(lam / mu)
    radius = sqrt(2 * gap0) / (2 * ratio * (2 * ratio + 1))

    per_accuracy = m + sqrt(m * (L_tilde + lam) / (mu + lam))
    accuracy = max(0.0, log(1 / radius ** 2)) if radius > 0 else 0.0

    return whole_iterations(per_accuracy * (accuracy + k * sqrt(mu / lam)))

from math import sqrt


def apgd1_envelope(k: int, lam: float, mu: float, n: int, gap0: float, dist0_sq: float) -> float:
    """ Bound on F(x^k) - F* for Apgd1 """

    return (1 - sqrt(mu / (lam + mu))) ** k * (gap0 + mu / (2 * n) * dist0_sq)


def apgd2_envelope(k: int, L: float, mu: float, n: int, gap0: float, dist0_sq: float) -> float:
    """ Bound on F(x^k) - F* for Apgd2 """

    return (1 - sqrt(mu / (L + mu))) ** k * (gap0 + mu / (2 * n) * dist0_sq)

from logging import info
from logging import warning
from math import sqrt

from numpy import array
from numpy import eye
from numpy import kron
from numpy import ndarray
from numpy import ones
from numpy import zeros
from scipy.linalg import eigvalsh

from perfl.core.errors import InstanceError
from perfl.core.problem import Problem
from perfl.losses.quadratic_loss import QuadraticLoss


# relative slack of the eigensolve certificates
CERTIFICATE_SLACK = 1e-9

# gamma^(2T) has to stay representable
UNDERFLOW_FLOOR = 1e-300


def coupling_matrix(d: int, pairs) -> ndarray:
    """ Hessian of (1/2) sum over pairs of (z_a - z_b)^2 """

    C = zeros((d, d))

    for a, b in pairs:
        C[a, a] += 1
        C[b, b] += 1
        C[a, b] -= 1
        C[b, a] -= 1

    return C


def first_group_pairs(T: int):
    """ 0-based (1,2), (3,4), ..., (2T-3, 2T-2) """

    return [(2 * i - 1, 2 * i) for i in range(1, T)]


def second_group_pairs(T: int):
    """ 0-based (0,1), (2,3), ..., (2T-2, 2T-1) """

    return [(2 * i, 2 * i + 1) for i in range(T)]


def decay_rate(epsilon: float, c: float, r: float) -> float:
    """ Smaller eigenvalue of the transfer matrix; its determinant is one """

    trace = (epsilon ** 2 + 2 * c * epsilon + 2 * c * r + 2 * epsilon * r) / (c * r)
    return 2 / (trace + sqrt(trace ** 2 - 4))


def gamma_floor(mu: float, lam: float, L: float) -> float:
    return 1 - 10 * max(sqrt(mu / lam), sqrt(mu / (L - mu)))


class LowerBoundInstance(object):
    """ Two groups of clients whose quadratics couple alternating coordinate
    pairs, so information crosses one coordinate per communication.

    The optimum decays geometrically along the coordinates at rate gamma. """

    n: int
    T: int
    mu: float
    lam: float
    L: float

    a: float
    """ weight of the linear term on the first coordinate """

    b: float
    """ curvature added on the last coordinate of the first group """

    c: float
    """ coupling strength, in units of lambda """

    delta: float
    """ c = delta mu / lambda when coupling at full lambda would exceed L, else None """

    r: float
    """ share of the second group in the average seen by the first """

    gamma: float
    """ decay rate of the optimum """

    problem: Problem

    def __init__(self, n: int, T: int, mu: float, L: float, lam: float) -> None:
        if not L > mu > 0:
            raise InstanceError("need L > mu > 0, got L=%r mu=%r" % (L, mu))

        if not lam >= mu:
            raise InstanceError("need lambda >= mu, got lambda=%r mu=%r" % (lam, mu))

        if n < 2 or T < 2:
            raise InstanceError("need n >= 2 and T >= 2, got n=%d T=%d" % (n, T))

        self.n, self.T = n, T
        self.mu, self.L, self.lam = float(mu), float(L), float(lam)
        self.a = 1.0

        # (lambda c/2)(u - v)^2 adds 2 lambda c to the curvature
        if L >= 2 * lam + mu:
            self.c = 1.0
            self.delta = None
        else:
            self.delta = (L - mu) / (2 * mu)

            if self.delta < 1:
                raise InstanceError(
                    "coupling needs L >= 3 mu so that delta = (L - mu)/(2 mu) >= 1, got L=%r mu=%r" % (L, mu))

            self.c = self.delta * mu / lam

        M = n // 2
        self.r = 0.5 if n % 2 == 0 else M / n
        self.first_size = M
        self.first_scale = 1.0 if n % 2 == 0 else (M + 1) / M

        self.gamma = decay_rate(self.epsilon, self.c, self.r)
        v1 = self.eigenvector()[0]
        self.b = self.r * (v1 - 1) - self.epsilon

        if self.b < 0:
            raise InstanceError("negative end curvature b=%r" % self.b)

        if self.gamma < gamma_floor(mu, lam, L):
            raise InstanceError("decay rate %r below %r" % (self.gamma, gamma_floor(mu, lam, L)))

        if self.gamma ** (2 * T) < UNDERFLOW_FLOOR:
            raise InstanceError("T=%d too large: gamma^(2T) underflows double precision" % T)

        self.problem = Problem(self.build_losses(), lam)
        self.certify_curvature()

        info("lower-bound instance n=%d T=%d c=%g b=%g r=%g gamma=%.12g", n, T, self.c, self.b, self.r, self.gamma)

    @property
    def d(self) -> int:
        return 2 * self.T

    @property
    def epsilon(self) -> float:
        return self.mu / self.lam

    def is_first_group(self, i: int) -> bool:
        return i < self.first_size

    def transfer_matrix(self) -> ndarray:
        """ Maps the pair at coordinate i to the pair at coordinate i+1 """

        c, r = self.c, self.r
        s = c + self.epsilon + r

        return array([[-r / c, s / c], [-s / c, s ** 2 / (c * r) - c / r]])

    def eigenvector(self) -> ndarray:
        s = self.c + self.epsilon + self.r
        return array([s / (self.r + self.c * self.gamma), 1.0])

    def build_losses(self) -> list[QuadraticLoss]:
        d, T = self.d, self.T
        end = zeros((d, d))
        end[d - 1, d - 1] = 1
        first_linear = zeros(d)
        first_linear[0] = self.a

        scale = self.first_scale
        first = QuadraticLoss(
            scale * (self.lam * self.c * coupling_matrix(d, first_group_pairs(T)) + self.lam * self.b * end),
            scale * first_linear,
            scale * self.mu,
        )
        second = QuadraticLoss(self.lam * self.c * coupling_matrix(d, second_group_pairs(T)), zeros(d), self.mu)

        return [first if self.is_first_group(i) else second for i in range(self.n)]

    def certify_curvature(self) -> None:
        for name, loss in (("first", self.problem.losses[0]), ("second", self.problem.losses[-1])):
            eigs = eigvalsh(loss.hessian())

            if eigs[0] < self.mu * (1 - CERTIFICATE_SLACK):
                raise InstanceError("%s group is only %r-strongly convex" % (name, eigs[0]))

            if eigs[-1] > self.L * (1 + CERTIFICATE_SLACK):
                if self.n % 2 == 0:
                    raise InstanceError("%s group is %r-smooth, above L=%r" % (name, eigs[-1], self.L))

                warning("%s group is %r-smooth, above L=%r after the odd-n rescaling", name, eigs[-1], self.L)

    def quadratic_form(self) -> tuple[ndarray, ndarray]:
        """ (M, e) with grad F(x) = (lambda/n) M x + e/n on the flattened point """

        n, d, T = self.n, self.d, self.T

        M = kron(eye(n) - ones((n, n)) / n, eye(d))
        e = zeros(n * d)

        first = coupling_matrix(d, first_group_pairs(T)) * self.c
        first[d - 1, d - 1] += self.b
        second = coupling_matrix(d, second_group_pairs(T)) * self.c

        for i in range(n):
            part = slice(i * d, (i + 1) * d)

            if self.is_first_group(i):
                M[part, part] += self.first_scale * (first + self.epsilon * eye(d))
                e[i * d] = self.first_scale * self.a
            else:
                M[part, part] += second + self.epsilon * eye(d)

        return M, e


def build_instance(n: int, T: int, mu: float, L: float, lam: float) -> LowerBoundInstance:
    return LowerBoundInstance(n, T, mu, L, lam)

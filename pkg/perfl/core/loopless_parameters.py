from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

from perfl.core.errors import ParameterError


@dataclass(frozen=True)
class LooplessParameters(object):
    """ Step sizes of the loopless accelerated variance-reduced scheme.

    The same parameterization drives the federated AL2SGD+ loop (constants
    of F) and the local Katyusha subsolver (constants of one client's h). """

    eta: float
    theta1: float
    theta2: float
    gamma: float
    beta: float

    @classmethod
    def from_constants(cls, smoothness: float, expected_smoothness: float,
                       strong_convexity: float, rho: float) -> LooplessParameters:
        """ smoothness: of the objective; expected_smoothness: of its
        estimator; strong_convexity: of the objective; rho: anchor probability """

        if not 0 < rho <= 1:
            raise ParameterError("rho must lie in (0, 1], got %r" % rho)

        if not (smoothness > 0 and expected_smoothness > 0 and strong_convexity > 0):
            raise ParameterError("constants must be positive")

        top = max(smoothness, expected_smoothness)

        eta = 1 / (4 * top)
        theta2 = expected_smoothness / (2 * top)
        theta1 = min(0.5, sqrt(eta * strong_convexity * max(0.5, theta2 / rho)))
        gamma = 1 / max(2 * strong_convexity, 4 * theta1 / eta)
        beta = 1 - gamma * strong_convexity

        return cls(eta, theta1, theta2, gamma, beta)

    def override(self, **values) -> LooplessParameters:
        """ Replace some of the parameters, keeping the others """

        fields = {**self.__dict__, **{k: v for k, v in values.items() if v is not None}}
        params = LooplessParameters(**fields)

        if not (params.theta1 > 0 and params.theta2 >= 0 and params.theta1 + params.theta2 <= 1):
            raise ParameterError("need theta1 > 0, theta2 >= 0, theta1 + theta2 <= 1")

        return params

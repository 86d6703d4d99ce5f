from __future__ import annotations

from typing import TYPE_CHECKING

from perfl.core.errors import ParameterError
from perfl.core.smoothness_info import SmoothnessInfo
from perfl.core.stacked_point import StackedPoint

if TYPE_CHECKING:
    from perfl.losses.local_loss import LocalLoss


class Problem(object):
    """ F(x) = (1/n) sum_i f_i(x_i) + lambda psi(x) """

    losses: list["LocalLoss"]
    """ one loss per client """

    lam: float
    """ penalty weight lambda """

    constants: SmoothnessInfo
    """ uniform constants over the clients """

    def __init__(self, losses: list["LocalLoss"], lam: float, constants: SmoothnessInfo = None) -> None:
        if len(losses) < 1:
            raise ParameterError("a problem needs at least one client")

        if not lam >= 0:
            raise ParameterError("lambda must be non-negative, got %r" % lam)

        dims = {loss.dim for loss in losses}
        if len(dims) != 1:
            raise ParameterError("clients disagree on model dimension: %s" % sorted(dims))

        self.losses = list(losses)
        self.lam = float(lam)
        self.constants = constants or SmoothnessInfo.combine([loss.constants for loss in losses])

    @property
    def n(self) -> int:
        return len(self.losses)

    @property
    def d(self) -> int:
        return self.losses[0].dim

    @property
    def m(self) -> int:
        return self.constants.m

    def with_lambda(self, lam: float) -> Problem:
        return Problem(self.losses, lam, self.constants)

    def zeros(self) -> StackedPoint:
        return StackedPoint.zeros(self.n, self.d)

    def require_lambda_at_least(self, factor: float, who: str) -> None:
        if self.lam < factor * self.constants.mu:
            raise ParameterError(
                "%s needs lambda >= %g mu, got lambda=%r mu=%r"
                % (who, factor, self.lam, self.constants.mu))

    def is_quadratic(self) -> bool:
        return all(loss.is_quadratic for loss in self.losses)

    def __repr__(self) -> str:
        return "Problem(n=%d, d=%d, lambda=%g, %s)" % (self.n, self.d, self.lam, self.constants)

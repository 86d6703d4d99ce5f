from dataclasses import astuple
from dataclasses import dataclass


@dataclass(frozen=True)
class TraceRow(object):
    """ Convergence record taken after an iteration that communicated """

    k: int
    comm_rounds: int
    grad_calls: int
    prox_calls: int
    summand_grad_calls: int

    rel_subopt: float
    """ (F(x^k) - F*)/(F(x^0) - F*), nan when F* is unknown """

    dist_sq: float
    """ |x^k - x*|^2, nan when x* is unknown """

    HEADER = ("k", "comm_rounds", "grad_calls", "prox_calls", "summand_grad_calls", "rel_subopt", "dist_sq")

    def fields(self) -> tuple:
        return astuple(self)

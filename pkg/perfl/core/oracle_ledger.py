from __future__ import annotations

from dataclasses import dataclass

from perfl.core.local_work import LocalWork


@dataclass
class OracleLedger(object):
    """ Monotone counters of communication rounds and local oracle calls.

    One unit of a local oracle is all n clients querying it at once. """

    comm_rounds: int = 0
    """ C(k), number of cross-client averages computed so far """

    grad_calls: int = 0
    """ full local gradients """

    prox_calls: int = 0
    """ local proximal operators """

    summand_grad_calls: int = 0
    """ gradients of a single summand of the local finite sum """

    def communicate(self, rounds: int = 1) -> None:
        assert rounds >= 0
        self.comm_rounds += rounds

    def charge_grad(self, units: int = 1) -> None:
        assert units >= 0
        self.grad_calls += units

    def charge_prox(self, units: int = 1) -> None:
        assert units >= 0
        self.prox_calls += units

    def charge_summand_grad(self, units: int = 1) -> None:
        assert units >= 0
        self.summand_grad_calls += units

    def charge(self, work: LocalWork) -> None:
        self.charge_grad(work.grad_calls)
        self.charge_prox(work.prox_calls)
        self.charge_summand_grad(work.summand_grad_calls)

    def snapshot(self) -> OracleLedger:
        return OracleLedger(self.comm_rounds, self.grad_calls, self.prox_calls, self.summand_grad_calls)

    def summand_equivalent(self, m: int) -> int:
        """ Local work in summand gradients, a full gradient costing m """

        return self.summand_grad_calls + m * self.grad_calls

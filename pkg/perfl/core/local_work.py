from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class LocalWork(object):
    """ Oracle calls made by one client between two communications """

    grad_calls: int = 0
    summand_grad_calls: int = 0
    prox_calls: int = 0

    @staticmethod
    def parallel(works: list[LocalWork]) -> LocalWork:
        """ Clients run side by side, so the slowest one sets the units """

        return LocalWork(
            max((w.grad_calls for w in works), default=0),
            max((w.summand_grad_calls for w in works), default=0),
            max((w.prox_calls for w in works), default=0),
        )

from typing import Callable

from numpy import abs as absolute
from numpy import array
from numpy import float64
from numpy import ndarray
from numpy import zeros_like
from numpy.random import Generator
from numpy.random import SeedSequence
from numpy.random import default_rng


def chunks(indices, size: int):
    for offset in range(0, len(indices), size):
        yield indices[offset: offset + size]


def difference_step(x: ndarray) -> float:
    """ Central-difference step balancing truncation and rounding in double precision """

    return 1e-6 * (1.0 + float(absolute(x).max()))


def central_difference(fn: Callable[[ndarray], float], x) -> ndarray:
    x = array(x, dtype=float64)
    h = difference_step(x)
    grad = zeros_like(x)

    it = x.reshape(-1)
    out = grad.reshape(-1)

    for t in range(it.size):
        saved = it[t]

        it[t] = saved + h
        forward = fn(x)

        it[t] = saved - h
        backward = fn(x)

        it[t] = saved
        out[t] = (forward - backward) / (2 * h)

    return grad


def spawn_streams(seed: int, n: int) -> tuple[list[Generator], Generator]:
    """ One independent stream per client plus one for the coordinator """

    children = SeedSequence(seed).spawn(n + 1)
    return [default_rng(s) for s in children[:n]], default_rng(children[n])

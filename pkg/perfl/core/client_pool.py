from concurrent.futures import ThreadPoolExecutor
from logging import debug
from os import environ
from typing import Callable, TypeVar


T = TypeVar("T")


def threads_from_environment() -> int:
    value = environ.get("PERFL_THREADS", "1")

    try:
        return max(1, int(value))
    except ValueError:
        debug("ignoring PERFL_THREADS=%r", value)
        return 1


class ClientPool(object):
    """ Runs one callable per client; results come back in client order.

    Clients draw randomness only from their own stream, so results do not
    depend on how many threads are used. """

    def __init__(self, threads: int = None) -> None:
        self.threads = threads_from_environment() if threads is None else max(1, threads)
        self._executor = None

    def __enter__(self):
        if self.threads > 1:
            self._executor = ThreadPoolExecutor(max_workers=self.threads)

        return self

    def __exit__(self, exc_type, exc_value, traceback) -> None:
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None

    def map(self, fn: Callable[[int], T], n: int) -> list[T]:
        if self._executor is None:
            return [fn(i) for i in range(n)]

        return list(self._executor.map(fn, range(n)))

from __future__ import annotations

from numpy import array
from numpy import float64
from numpy import ndarray
from numpy import zeros


class StackedPoint(object):
    """ A point of R^{n*d} kept as n client blocks of dimension d """

    blocks: ndarray
    """ (n, d) array, row i is the model of client i """

    def __init__(self, blocks) -> None:
        self.blocks = array(blocks, dtype=float64, ndmin=2)

        assert self.blocks.ndim == 2
        assert self.blocks.shape[0] >= 1 and self.blocks.shape[1] >= 1

    @classmethod
    def zeros(cls, n: int, d: int) -> StackedPoint:
        return cls(zeros((n, d)))

    @classmethod
    def consensus(cls, n: int, v) -> StackedPoint:
        v = array(v, dtype=float64)
        return cls(v[None, :].repeat(n, axis=0))

    @classmethod
    def from_flat(cls, flat, n: int) -> StackedPoint:
        return cls(array(flat, dtype=float64).reshape(n, -1))

    @property
    def n(self) -> int:
        return self.blocks.shape[0]

    @property
    def d(self) -> int:
        return self.blocks.shape[1]

    def mean(self) -> ndarray:
        """ x̄, the average of the client blocks """

        return self.blocks.mean(axis=0)

    def flat(self) -> ndarray:
        return self.blocks.reshape(-1).copy()

    def copy(self) -> StackedPoint:
        return StackedPoint(self.blocks)

    def dot(self, other: StackedPoint) -> float:
        self.__check(other)
        return float((self.blocks * other.blocks).sum())

    def norm_sq(self) -> float:
        return float((self.blocks ** 2).sum())

    def __check(self, other: StackedPoint) -> None:
        assert self.blocks.shape == other.blocks.shape, \
            "shape mismatch: %s vs %s" % (self.blocks.shape, other.blocks.shape)

    def __add__(self, other: StackedPoint) -> StackedPoint:
        self.__check(other)
        return StackedPoint(self.blocks + other.blocks)

    def __sub__(self, other: StackedPoint) -> StackedPoint:
        self.__check(other)
        return StackedPoint(self.blocks - other.blocks)

    def __mul__(self, scale: float) -> StackedPoint:
        return StackedPoint(self.blocks * scale)

    __rmul__ = __mul__

    def __neg__(self) -> StackedPoint:
        return StackedPoint(-self.blocks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StackedPoint):
            return NotImplemented

        return self.blocks.shape == other.blocks.shape and bool((self.blocks == other.blocks).all())

    def __repr__(self) -> str:
        return "StackedPoint(n=%d, d=%d)" % (self.n, self.d)

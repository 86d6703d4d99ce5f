from dataclasses import dataclass

from perfl.core.stacked_point import StackedPoint


@dataclass(frozen=True)
class Reference(object):
    """ Known optimum of a problem, if any """

    f_star: float = None
    x_star: StackedPoint = None

    source: str = "none"
    """ how the optimum was obtained """

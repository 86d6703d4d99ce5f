from enum import IntEnum


class StopCriterion(IntEnum):
    """ Quantity compared against the run target """

    REL_SUBOPT = 0,
    """ (F(x^k) - F*) / (F(x^0) - F*) """

    DISTANCE = 1,
    """ |x^k - x*|^2 / |x^0 - x*|^2 """

    GRADIENT_NORM = 2
    """ |grad F(x^k)|, needs neither F* nor x* """

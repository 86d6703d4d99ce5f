from enum import IntEnum


class SplitMode(IntEnum):
    """ How rows are dealt to the clients """

    HOMOGENEOUS = 0,
    """ Seeded uniform shuffle, then contiguous chunks. """

    HETEROGENEOUS = 1
    """ Stable sort by label (-1 first), then contiguous chunks. """

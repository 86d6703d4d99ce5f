from csv import writer
from dataclasses import dataclass
from logging import warning
from typing import TextIO

from numpy import argsort
from numpy import ndarray
from numpy.random import default_rng

from perfl.core.errors import ParameterError
from perfl.core.utility import chunks
from perfl.data.dataset import Dataset
from perfl.data.split_mode import SplitMode


@dataclass(frozen=True)
class ClientSplit(object):
    """ Disjoint row sets of equal size m, one per client """

    assignment: list[ndarray]
    n: int
    m: int

    dropped: int
    """ trailing rows left out so that every client holds m """


def split(data: Dataset, n: int, mode: SplitMode, seed: int = 0) -> ClientSplit:
    if n < 1:
        raise ParameterError("need at least one client, got %d" % n)

    if n > data.rows:
        raise ParameterError("cannot split %d rows over %d clients" % (data.rows, n))

    m = data.rows // n

    if mode == SplitMode.HOMOGENEOUS:
        order = default_rng(seed).permutation(data.rows)
    else:
        order = argsort(data.labels, kind="stable")

    assignment = list(chunks(order[: n * m], m))
    dropped = data.rows - n * m

    if dropped:
        warning("dropping %d trailing rows so every client holds %d", dropped, m)

    return ClientSplit(assignment, n, m, dropped)


def write_manifest(plan: ClientSplit, stream: TextIO) -> None:
    out = writer(stream, lineterminator="\n")
    out.writerow(("client_id", "row_index"))

    for client, rows in enumerate(plan.assignment):
        for row in rows:
            out.writerow((client, int(row)))


from csv import writer
from dataclasses import astuple
from dataclasses import dataclass
from dataclasses import fields
from math import isnan
from pathlib import Path
from typing import Iterable

from perfl.solvers.trace import Trace
from perfl.solvers.trace_row import TraceRow


# keeps log-scale plots finite
REL_SUBOPT_FLOOR = 1e-16


@dataclass(frozen=True)
class SummaryRow(object):
    """ One method at one lambda """

    lam: float
    method: str
    f_star: float
    f_star_source: str
    iterations: int
    comm_rounds: int
    grad_calls: int
    prox_calls: int
    summand_grad_calls: int

    summand_equivalent: int
    """ local work in summand gradients, a full gradient costing m """

    final_rel_subopt: float

    comm_to_target: int
    """ None when the target was never reached """


def format_cell(value) -> str:
    if value is None:
        return ""

    if isinstance(value, float):
        return repr(value)

    return str(value)


def clamp(rel_subopt: float) -> float:
    return rel_subopt if isnan(rel_subopt) else max(rel_subopt, REL_SUBOPT_FLOOR)


def write_rows(path: Path, header: Iterable[str], rows: Iterable[tuple]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as stream:
        out = writer(stream, lineterminator="\n")
        out.writerow(header)

        for row in rows:
            out.writerow([format_cell(value) for value in row])


def trace_cells(row: TraceRow) -> tuple:
    return (row.k, row.comm_rounds, row.grad_calls, row.prox_calls, row.summand_grad_calls,
            clamp(row.rel_subopt), row.dist_sq)


def write_trace(trace: Trace, path: Path) -> None:
    write_rows(path, TraceRow.HEADER, (trace_cells(row) for row in trace.rows))


def write_summary(rows: list[SummaryRow], path: Path) -> None:
    write_rows(path, [f.name for f in fields(SummaryRow)], (astuple(row) for row in rows))


def write_comm_to_target(rows: list[SummaryRow], path: Path) -> None:
    write_rows(path, ("lambda", "method", "comm"), ((row.lam, row.method, row.comm_to_target) for row in rows))

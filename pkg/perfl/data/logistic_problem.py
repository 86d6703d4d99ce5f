from perfl.core.problem import Problem
from perfl.data.client_split import ClientSplit
from perfl.data.dataset import Dataset
from perfl.losses.logistic_loss import LogisticLoss


def logistic_problem(data: Dataset, plan: ClientSplit, reg: float, lam: float = None) -> Problem:
    """ One logistic loss per client over its rows; lambda defaults to 1/m """

    losses = [LogisticLoss(data.dense_rows(rows), data.labels[rows], reg) for rows in plan.assignment]
    return Problem(losses, 1 / plan.m if lam is None else lam)

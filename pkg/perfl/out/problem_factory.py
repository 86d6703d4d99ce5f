from dataclasses import dataclass
from logging import info

from numpy import arange

from perfl.core.errors import ConfigError
from perfl.core.problem import Problem
from perfl.data.client_split import split
from perfl.data.dataset import Dataset
from perfl.data.dataset import normalize
from perfl.data.libsvm_reader import read_libsvm
from perfl.data.logistic_problem import logistic_problem
from perfl.data.synthetic import random_quadratic_problem
from perfl.data.synthetic import synthetic_logistic_dataset
from perfl.lowerbound.lower_bound_instance import build_instance
from perfl.out.experiment_config import ExperimentConfig
from perfl.out.experiment_config import resolve
from perfl.out.instance_file import load_instance


# rows of the synthetic logistic clone when libsvm.rows is not given
SYNTHETIC_ROWS = 600


@dataclass
class ProblemCase(object):
    """ One lambda of an experiment """

    lam: float
    problem: Problem


def load_dataset(config: ExperimentConfig) -> Dataset:
    if config.source == "libsvm":
        if config.libsvm_path is None or not config.libsvm_path.is_file():
            raise ConfigError("libsvm file not found: %s" % config.libsvm_path)

        data = read_libsvm(config.libsvm_path)
    else:
        data = synthetic_logistic_dataset(config.rows or SYNTHETIC_ROWS, config.d, config.seed)

    if config.rows is not None and config.rows < data.rows:
        data = data.subset(arange(config.rows))

    return normalize(data)


def base_problem(config: ExperimentConfig) -> Problem:
    """ The problem of the experiment at lambda 0; lambda is set per case """

    if config.source == "quadratic":
        if config.quadratic_path is not None:
            return load_instance(config.quadratic_path, 0.0)

        return random_quadratic_problem(config.clients, config.d, config.mu, config.L, 0.0, config.seed)

    data = load_dataset(config)
    plan = split(data, config.clients, config.split_mode, config.seed)

    info("%s split over %d clients, m=%d", data, plan.n, plan.m)

    return logistic_problem(data, plan, config.mu, 0.0)


def build_cases(config: ExperimentConfig) -> list[ProblemCase]:
    if config.source == "lowerbound":
        cases = []

        for value in config.lambdas:
            lam = resolve(value, 1)
            instance = build_instance(config.clients, config.T, config.mu, config.L, lam)
            cases.append(ProblemCase(lam, instance.problem))

        return cases

    problem = base_problem(config)

    return [ProblemCase(resolve(value, problem.m), problem.with_lambda(resolve(value, problem.m)))
            for value in config.lambdas]

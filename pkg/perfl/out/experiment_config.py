from dataclasses import dataclass
from dataclasses import field
from pathlib import Path
from typing import Iterable, Union

from perfl.core.errors import ConfigError
from perfl.core.solver_method import SolverMethod
from perfl.core.stop_criterion import StopCriterion
from perfl.data.split_mode import SplitMode
from perfl.out.config_helper.exchange_method import exchange_method
from perfl.out.config_helper.exchange_split_mode import exchange_split_mode
from perfl.out.config_helper.exchange_split_mode import exchange_stop_on


# written in place of a number, resolved once the rows per client are known
PER_SUMMAND = "1/m"

SOURCES = ("libsvm", "synthetic_logistic", "quadratic", "lowerbound")

Value = Union[float, str]


@dataclass
class ExperimentConfig(object):
    """ Parsed key=value experiment file """

    source: str = "quadratic"
    """ one of SOURCES """

    libsvm_path: Path = None
    rows: int = None
    """ keep only the first rows of the data set """

    split_mode: SplitMode = SplitMode.HOMOGENEOUS
    clients: int = 10
    d: int = 10
    quadratic_path: Path = None
    T: int = 25
    export: Path = None
    """ where certify-lb or gen-quadratic writes the instance """

    lambdas: list[Value] = field(default_factory=lambda: [PER_SUMMAND])
    mu: float = 1e-4
    L: float = 1.0

    methods: list[SolverMethod] = field(default_factory=lambda: [SolverMethod.APGD1])
    method_params: dict = field(default_factory=dict)
    """ SolverMethod -> {name: value} """

    max_comm: int = 1000
    target: float = 0.0
    stop_on: StopCriterion = StopCriterion.REL_SUBOPT
    seed: int = 0
    output: Path = Path("perfl-out")

    def params_for(self, method: SolverMethod, m: int) -> dict:
        return {name: resolve(value, m) for name, value in self.method_params.get(method, {}).items()}


def resolve(value: Value, m: int):
    if value == PER_SUMMAND:
        return 1 / m

    return value


def parse_value(text: str) -> Value:
    text = text.strip()

    if text.replace(" ", "") == PER_SUMMAND:
        return PER_SUMMAND

    try:
        return float(text)
    except ValueError:
        return text


def parse_int(key: str, text: str) -> int:
    try:
        value = float(text)
    except ValueError:
        raise ConfigError("%s must be an integer, got %r" % (key, text))

    if value != int(value):
        raise ConfigError("%s must be an integer, got %r" % (key, text))

    return int(value)


def parse_float(key: str, text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ConfigError("%s must be a number, got %r" % (key, text))


def parse_config(lines: Iterable[str]) -> ExperimentConfig:
    config = ExperimentConfig()

    for number, line in enumerate(lines, start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue

        key, equals, text = line.partition("=")
        if not equals:
            raise ConfigError("line %d: expected key=value, got %r" % (number, line))

        key, text = key.strip().lower(), text.strip()

        try:
            apply(config, key, text)
        except ConfigError as e:
            raise ConfigError("line %d: %s" % (number, e))

    if config.source not in SOURCES:
        raise ConfigError("source must be one of %s, got %r" % (", ".join(SOURCES), config.source))

    if config.source == "libsvm" and config.libsvm_path is None:
        raise ConfigError("source=libsvm needs libsvm.path")

    return config


def apply(config: ExperimentConfig, key: str, text: str) -> None:
    if key == "source":
        config.source = text.lower()
    elif key == "libsvm.path":
        config.libsvm_path = Path(text)
    elif key == "libsvm.rows" or key == "rows":
        config.rows = parse_int(key, text)
    elif key == "split":
        config.split_mode = exchange_split_mode(text)
    elif key == "clients" or key == "n":
        config.clients = parse_int(key, text)
    elif key == "quadratic.d" or key == "d":
        config.d = parse_int(key, text)
    elif key == "quadratic.path":
        config.quadratic_path = Path(text)
    elif key == "lowerbound.t" or key == "t":
        config.T = parse_int(key, text)
    elif key == "lowerbound.export" or key == "export":
        config.export = Path(text)
    elif key == "lambda":
        config.lambdas = [parse_value(part) for part in text.split(",")]
        for value in config.lambdas:
            if isinstance(value, str) and value != PER_SUMMAND:
                raise ConfigError("lambda must be a number or %s, got %r" % (PER_SUMMAND, value))
    elif key == "mu":
        config.mu = parse_float(key, text)
    elif key == "l" or key == "quadratic.l":
        config.L = parse_float(key, text)
    elif key == "methods":
        config.methods = [exchange_method(name) for name in text.split(",") if name.strip()]
    elif key == "max_comm":
        config.max_comm = parse_int(key, text)
    elif key == "target":
        config.target = parse_float(key, text)
    elif key == "stop_on":
        config.stop_on = exchange_stop_on(text)
    elif key == "seed":
        config.seed = parse_int(key, text)
    elif key == "output":
        config.output = Path(text)
    elif "." in key:
        prefix, _, name = key.partition(".")
        config.method_params.setdefault(exchange_method(prefix), {})[name] = parse_value(text)
    else:
        raise ConfigError("unknown key %r" % key)


def load_config(path: Path) -> ExperimentConfig:
    path = Path(path)

    if not path.is_file():
        raise ConfigError("config file not found: %s" % path)

    with open(path, "r", encoding="utf-8") as stream:
        return parse_config(stream)

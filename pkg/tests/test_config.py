from pathlib import Path
from unittest import TestCase

from perfl.core.errors import ConfigError
from perfl.core.solver_method import SolverMethod
from perfl.core.stop_criterion import StopCriterion
from perfl.data.split_mode import SplitMode
from perfl.out.config_helper.exchange_method import exchange_method
from perfl.out.config_helper.exchange_split_mode import exchange_split_mode
from perfl.out.config_helper.exchange_split_mode import exchange_stop_on
from perfl.out.experiment_config import PER_SUMMAND
from perfl.out.experiment_config import load_config
from perfl.out.experiment_config import parse_config


MUSHROOMS_RUN = """
# mushrooms, twelve clients
source = libsvm
libsvm.path = data/mushrooms
split = heterogeneous
clients = 12
lambda = 1/m
methods = al2sgd_plus, l2sgd_plus
al2sgd_plus.p = 1/m
al2sgd_plus.rho = 1/m
l2sgd_plus.eta = 0.5
max_comm = 1000
seed = 3
output = out/mushrooms
"""


class TestConfig(TestCase):

    def test_parse(self):
        config = parse_config(MUSHROOMS_RUN.splitlines())

        self.assertEqual(config.source, "libsvm")
        self.assertEqual(config.libsvm_path, Path("data/mushrooms"))
        self.assertEqual(config.split_mode, SplitMode.HETEROGENEOUS)
        self.assertEqual(config.clients, 12)
        self.assertEqual(config.lambdas, [PER_SUMMAND])
        self.assertEqual(config.methods, [SolverMethod.AL2SGD_PLUS, SolverMethod.L2SGD_PLUS])
        self.assertEqual(config.max_comm, 1000)
        self.assertEqual(config.seed, 3)
        self.assertEqual(config.output, Path("out/mushrooms"))

    def test_method_params_resolve(self):
        config = parse_config(MUSHROOMS_RUN.splitlines())

        self.assertEqual(config.params_for(SolverMethod.AL2SGD_PLUS, 677), {"p": 1 / 677, "rho": 1 / 677})
        self.assertEqual(config.params_for(SolverMethod.L2SGD_PLUS, 677), {"eta": 0.5})
        self.assertEqual(config.params_for(SolverMethod.APGD1, 677), {})

    def test_defaults(self):
        config = parse_config([])

        self.assertEqual(config.source, "quadratic")
        self.assertEqual(config.stop_on, StopCriterion.REL_SUBOPT)
        self.assertEqual(config.target, 0.0)

    def test_lambda_grid(self):
        config = parse_config(["lambda = 0.01, 0.1, 1, 10, 100", "stop_on = dist", "target = 1e-4"])

        self.assertEqual(config.lambdas, [0.01, 0.1, 1.0, 10.0, 100.0])
        self.assertEqual(config.stop_on, StopCriterion.DISTANCE)
        self.assertEqual(config.target, 1e-4)

    def test_errors(self):
        for lines in (["bogus = 1"], ["clients = 2.5"], ["max_comm = many"], ["methods = sgd"],
                      ["split = random"], ["source = csv"], ["source = libsvm"], ["lambda = big"],
                      ["no equals sign"], ["stop_on = time"], ["apgd1"]):
            with self.assertRaises(ConfigError, msg=lines[0]):
                parse_config(lines)

    def test_error_names_line(self):
        with self.assertRaises(ConfigError) as context:
            parse_config(["seed = 1", "", "clients = x"])

        self.assertIn("line 3", str(context.exception))

    def test_missing_file(self):
        with self.assertRaises(ConfigError):
            load_config(Path("/nonexistent/perfl.conf"))

    def test_exchange(self):
        self.assertEqual(exchange_method("APGD1"), SolverMethod.APGD1)
        self.assertEqual(exchange_method("al2sgd+"), SolverMethod.AL2SGD_PLUS)
        self.assertEqual(exchange_method("iapgd-katyusha"), SolverMethod.IAPGD_KATYUSHA)
        self.assertEqual(exchange_method("iapgd"), SolverMethod.IAPGD_AGD)

        for method in SolverMethod:
            self.assertEqual(exchange_method(method.label), method)

        self.assertEqual(exchange_split_mode("Homogeneous"), SplitMode.HOMOGENEOUS)
        self.assertEqual(exchange_stop_on("gradient_norm"), StopCriterion.GRADIENT_NORM)

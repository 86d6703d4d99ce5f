from argparse import ArgumentParser
from logging import WARNING
from logging import getLogger
from logging import info
from pathlib import Path
import sys

from numpy import arange

from perfl.core.errors import ConfigError
from perfl.core.errors import PerflError
from perfl.data.client_split import split
from perfl.data.client_split import write_manifest
from perfl.data.libsvm_reader import read_libsvm
from perfl.data.synthetic import random_quadratic_problem
from perfl.out.certify_runner import CertifyRunner
from perfl.out.certify_runner import format_report
from perfl.out.config_helper.exchange_split_mode import exchange_split_mode
from perfl.out.experiment_config import load_config
from perfl.out.experiment_config import resolve
from perfl.out.experiment_runner import ExperimentRunner
from perfl.out.instance_file import save_instance


def cmd_run(args) -> int:
    config = load_config(args.config)
    summary = ExperimentRunner(config).run()

    info("%d traces written to %s", len(summary), config.output)
    return 0


def cmd_certify_lowerbound(args) -> int:
    runner = CertifyRunner(load_config(args.config))

    for method, report in runner.run().items():
        for line in format_report(method, report):
            print(line)

    return 0 if runner.passed else 1


def cmd_split(args) -> int:
    if not args.libsvm.is_file():
        raise ConfigError("libsvm file not found: %s" % args.libsvm)

    data = read_libsvm(args.libsvm)

    if args.rows is not None and args.rows < data.rows:
        data = data.subset(arange(args.rows))

    plan = split(data, args.n, exchange_split_mode(args.mode), args.seed)

    if args.output is None:
        write_manifest(plan, sys.stdout)
    else:
        with open(args.output, "w", encoding="utf-8", newline="") as stream:
            write_manifest(plan, stream)

    print("clients=%d m=%d dropped=%d" % (plan.n, plan.m, plan.dropped), file=sys.stderr)
    return 0


def cmd_gen_quadratic(args) -> int:
    config = load_config(args.config)

    if len(config.lambdas) != 1:
        raise ConfigError("gen-quadratic takes a single lambda, got %d" % len(config.lambdas))

    problem = random_quadratic_problem(
        config.clients, config.d, config.mu, config.L, resolve(config.lambdas[0], 1), config.seed)

    path = config.export or config.output.with_suffix(".npz")
    save_instance(problem, path)

    info("%r written to %s", problem, path)
    return 0


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="perfl", description="personalized federated learning solvers and lower bounds")
    parser.add_argument("--quiet", action="store_true", help="log warnings and errors only")

    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="run the configured methods and write CSV traces")
    run.add_argument("config", type=Path)
    run.set_defaults(handler=cmd_run)

    certify = commands.add_parser("certify-lb", help="check deterministic methods against the lower bound")
    certify.add_argument("config", type=Path)
    certify.set_defaults(handler=cmd_certify_lowerbound)

    manifest = commands.add_parser("split", help="write the client split of a LIBSVM file")
    manifest.add_argument("libsvm", type=Path)
    manifest.add_argument("--n", type=int, required=True)
    manifest.add_argument("--mode", default="homogeneous", choices=("homogeneous", "heterogeneous"))
    manifest.add_argument("--seed", type=int, default=0)
    manifest.add_argument("--rows", type=int, default=None)
    manifest.add_argument("--output", type=Path, default=None)
    manifest.set_defaults(handler=cmd_split)

    generate = commands.add_parser("gen-quadratic", help="write a random quadratic instance as .npz")
    generate.add_argument("config", type=Path)
    generate.set_defaults(handler=cmd_gen_quadratic)

    return parser


def main(argv: list[str] = None) -> int:
    args = build_parser().parse_args(argv)

    if args.quiet:
        getLogger().setLevel(WARNING)

    try:
        return args.handler(args)
    except PerflError as e:
        print("perfl: %s" % e, file=sys.stderr)
        return 2

import argparse
import dotenv
import os
import sys
import logging
from pycatalyst.bench.config import read_config
from pycatalyst.bench.exceptions import (
    ConfigSyntaxError,
    FstarCertificationError,
    UnknownConfigTypeError,
)
from pycatalyst.bench.experiment import ExperimentParser
from pycatalyst.benchmark import estimate_fstar, run_experiment, sweep_kappa, write_synthetic
from pycatalyst.data.exceptions import DataError
from pycatalyst.exceptions import (
    ArgumentValidationError,
    ConfigError,
    InputError,
    NonConvergenceError,
    PycatalystError,
)
from pycatalyst import __version__

EXIT_CONFIG_ERROR = 2
EXIT_NON_CONVERGENCE = 3
EXIT_FAILURE = 1

# (flag, config key, help) for options that map one-to-one onto experiment config keys
EXPERIMENT_OPTIONS = [
    ("--data", "data", "svmlight dataset to read (.svm/.txt/.libsvm, .gz or - for stdin)."),
    ("--synthetic-kind", "synthetic_kind", "Generate a synthetic dataset instead: least_squares or logistic."),
    ("--n", "n", "Synthetic dataset: number of rows."),
    ("--p", "p", "Synthetic dataset: number of features."),
    ("--condition", "condition", "Synthetic dataset: condition number of the design."),
    ("--sparsity", "sparsity", "Synthetic dataset: fraction of nonzeros in the planted model."),
    ("--noise", "noise", "Synthetic dataset: label noise level."),
    ("--loss", "loss", "logistic or squared_error. default: logistic"),
    ("--reg", "reg", "ridge, l1 or elastic_net. default: ridge"),
    ("--lam", "lam", "l1 weight."),
    ("--mu", "mu", "ridge weight (strong convexity)."),
    ("--method", "method", "Inner method: ista, svrg, saga or miso. default: svrg"),
    ("--mode", "mode", "plain or catalyst. default: catalyst"),
    ("--criterion", "criterion", "Sub-problem stopping criterion: c1, c2, c3 or c1star. default: c1"),
    ("--kappa", "kappa", "Smoothing parameter, or auto. default: auto"),
    ("--schedule", "schedule", "Accuracy schedule: practical, theoretical or box. default: practical"),
    ("--gamma", "gamma", "Exponent slack of the convex-case schedules. default: 0.1"),
    ("--rho-factor", "rho_factor", "rho = RHO_FACTOR * sqrt(q) in the strongly convex schedules. default: 0.9"),
    ("--max-outer", "max_outer", "Maximum number of outer iterations. default: 1000"),
    ("--max-passes", "max_passes", "Pass budget of a plain run, safety cap per sub-problem otherwise. default: 1000"),
    ("--target", "target", "Relative gap at which a run stops. default: 1e-6"),
    ("--seed", "seed", "Random seed. default: 0"),
    ("--out", "out", "CSV trace to write (gen-data: svmlight file to write)."),
    ("--fstar", "fstar", "Known optimal value; skips f* estimation."),
    ("--fstar-cache", "fstar_cache", "JSON file caching estimated f* values."),
]


def _env_name(key):
    return "PYCATALYST_{}".format(key.upper())


def create_parser():
    parser = argparse.ArgumentParser(
        prog="pycatalyst",
        description="Accelerate first-order methods with Catalyst and benchmark them against the plain methods.",
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config",
        "-c",
        default=os.getenv("PYCATALYST_CONFIG"),
        help="An experiment config file (.yml/.yaml/.json) with flat keys. [$PYCATALYST_CONFIG]",
    )
    for flag, key, description in EXPERIMENT_OPTIONS:
        common.add_argument(
            flag,
            dest=key,
            default=os.getenv(_env_name(key)),
            help="{} [${}]".format(description, _env_name(key)),
        )

    common.add_argument(
        "--no-normalize",
        dest="normalize",
        action="store_const",
        const=False,
        default=os.getenv("PYCATALYST_NORMALIZE"),
        help="Keep feature rows as read instead of scaling them to unit norm. [$PYCATALYST_NORMALIZE]",
    )
    common.add_argument(
        "--no-full-pass-count",
        dest="count_full_passes",
        action="store_const",
        const=False,
        default=os.getenv("PYCATALYST_COUNT_FULL_PASSES"),
        help="Count only component gradients, not n per full pass. [$PYCATALYST_COUNT_FULL_PASSES]",
    )
    common.add_argument(
        "--wall-clock",
        dest="wall_clock",
        action="store_const",
        const=True,
        default=os.getenv("PYCATALYST_WALL_CLOCK"),
        help="Record elapsed time in the wall_ms column; off by default so reruns give identical files. [$PYCATALYST_WALL_CLOCK]",
    )
    common.add_argument(
        "--verbose",
        action="store_true",
        default=os.getenv("PYCATALYST_VERBOSE") or False,
        help="Increases the verbosity of the logging feature, to help when troubleshooting issues. [$PYCATALYST_VERBOSE]",
    )

    parser.add_argument("-v", "--version", action="version", version=__version__)

    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    subparsers.add_parser("run", parents=[common], help="Run one experiment and write its trace.")
    sweep = subparsers.add_parser(
        "sweep-kappa", parents=[common], help="Run catalyst on the grid kappa = 10^i kappa_0, i in -2..2."
    )
    sweep.add_argument(
        "--jobs",
        "-j",
        type=int,
        default=int(os.getenv("PYCATALYST_JOBS") or 1),
        help="Number of grid points to run in parallel. default: 1 [$PYCATALYST_JOBS]",
    )
    subparsers.add_parser("estimate-fstar", parents=[common], help="Print the certified optimal value.")
    subparsers.add_parser("gen-data", parents=[common], help="Write a synthetic dataset in svmlight format.")

    return parser


def merge_settings(args, file_config):
    """
    CLI flags and environment values (already folded into args) win over config file keys.
    """
    settings = dict(file_config)
    for _, key, _ in EXPERIMENT_OPTIONS:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    for key in ("normalize", "count_full_passes", "wall_clock"):
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    return settings


def cli(rawArgs=None):
    """
    Main entry point for the command line. Parse the cmdargs, load env and call the requested command
    :param args:
    :return:
    """
    logger = logging.getLogger()
    logger.setLevel(logging.DEBUG)

    logger.handlers.clear()
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(logging.INFO)
    console_handler.setFormatter(logging.Formatter("%(message)s"))
    logger.addHandler(console_handler)

    # find the dotenv from the current working dir rather than the execution location
    dotenv_file = dotenv.find_dotenv(usecwd=True)
    dotenv.load_dotenv(dotenv_path=dotenv_file)

    parser = create_parser()
    args = parser.parse_args(rawArgs)

    if args.verbose:
        console_handler.setLevel(logging.DEBUG)

    try:
        file_config = read_config(args.config) if args.config else {}
        config = ExperimentParser().parse(merge_settings(args, file_config))

        if args.command == "run":
            run_experiment(config, progress=True)
        elif args.command == "sweep-kappa":
            sweep_kappa(config, jobs=args.jobs, progress=True)
        elif args.command == "estimate-fstar":
            print("{:.17g}".format(estimate_fstar(config)))
        elif args.command == "gen-data":
            if config.synthetic is None:
                raise ArgumentValidationError(["Missing SYNTHETIC_KIND"])
            write_synthetic(config.synthetic, config.out or "-")
    except ArgumentValidationError as error:
        logger.error(
            "Missing or invalid values for required arguments: \n"
            + "\n".join(error.validation_messages)
            + "\nSet these using the command-line options, environment variables or a config file. \n"
            "For a complete list, See the program help below.\n"
        )
        parser.print_help()
        sys.exit(EXIT_CONFIG_ERROR)
    except (ConfigError, ConfigSyntaxError, UnknownConfigTypeError, DataError, InputError) as error:
        logger.error(error)
        sys.exit(EXIT_CONFIG_ERROR)
    except (NonConvergenceError, FstarCertificationError) as error:
        logger.error(error)
        if args.verbose and getattr(error, "certificate", None) is not None:
            logger.error("best certificate: %s", error.certificate)
        sys.exit(EXIT_NON_CONVERGENCE)
    except PycatalystError as error:
        logger.error(error)
        sys.exit(EXIT_FAILURE)


if __name__ == "__main__":
    cli()

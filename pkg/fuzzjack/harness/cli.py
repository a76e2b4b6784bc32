# -*- coding: utf-8 -*-

"""
Command line interface::

    fuzzjack approximate --function scaled_exp --methods all --n 4,8,16
    fuzzjack check --function bump_width --n 8
    fuzzjack diff "<12,15,19>" "<5,9,11>" --levels 10
    fuzzjack selftest --seed 9012

Exit codes: 0 success, 1 a certified bound failed, 2 bad input, 3 file system error.
"""

import argparse
import json
import logging
import os
import sys

import yaml

from fuzzjack.fuzzy.function import (
    alpha_slice,
    check_gh_chain,
    check_length_monotone,
    check_level_modulus,
    check_modulus_properties,
    check_nested_decreasing,
    check_nested_increasing,
    modulus,
)
from fuzzjack.fuzzy.io import load_fuzzy_number
from fuzzjack.fuzzy.number import AlphaGrid, g_difference, gh_cases, gh_difference, parse_fuzzy_literal
from fuzzjack.harness.job import ApproximationJob, experiment_function
from fuzzjack.utils.configs import ExperimentConfig
from fuzzjack.utils.errors import ConfigError, FuzzjackError
from fuzzjack.utils.log import file_output, set_level

logger = logging.getLogger(__name__)

SEED_ENV_KEY = "FUZZJACK_SEED"
LOG_FILE = "fuzzjack.log"


def _add_function_args(parser):
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--function", type=str, help="catalog function name")
    source.add_argument("--file", type=str, help="JSON sampled function file")
    parser.add_argument("--params", type=str, default=None,
                        help="catalog parameters as a YAML mapping, e.g. '{u: [0, 1, 2]}'")
    parser.add_argument("--alpha-levels", type=int, default=None, help="number of alpha subintervals")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fuzzjack",
                                     description="Jackson type approximation of fuzzy-number-valued functions.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug output")
    sub = parser.add_subparsers(dest="verb", required=True)

    approximate = sub.add_parser("approximate", help="run approximation experiments and verify the bounds")
    _add_function_args(approximate)
    approximate.add_argument("--config", type=str, default=None, help="YAML experiment file")
    approximate.add_argument("--methods", type=str, default=None,
                             help="comma separated methods or 'all'")
    approximate.add_argument("--n", type=str, default=None, help="comma separated numbers of subintervals")
    approximate.add_argument("--delta-rule", type=float, default=None, help="delta = rule / (2n)")
    approximate.add_argument("--eps", type=float, default=None, help="target slack epsilon")
    approximate.add_argument("--samples", type=int, default=None, help="uniform sample points")
    approximate.add_argument("--alpha", type=float, default=None, help="level of the interval_gh method")
    approximate.add_argument("--out", type=str, default=None, help="output directory")
    approximate.add_argument("--seed", type=int, default=None)
    approximate.add_argument("--strict", action="store_true", default=None,
                             help="fail instead of skipping methods whose hypotheses do not hold")

    check = sub.add_parser("check", help="hypothesis diagnostics of a function")
    _add_function_args(check)
    check.add_argument("--n", type=str, default="4,8,16", help="node counts of the gH chain check")
    check.add_argument("--alpha", type=float, default=0.0, help="level of the length checks")

    diff = sub.add_parser("diff", help="gH- and g-difference of two fuzzy numbers")
    diff.add_argument("u", help="JSON fuzzy number file or literal such as '<12,15,19>'")
    diff.add_argument("v", help="JSON fuzzy number file or literal")
    diff.add_argument("--levels", type=int, default=100, help="alpha subintervals of literals")

    selftest = sub.add_parser("selftest", help="run the test suites")
    selftest.add_argument("--seed", type=int, default=9012)
    selftest.add_argument("pytest_args", nargs="*", help="extra pytest arguments")
    return parser


def _params(text):
    if text is None:
        return None
    params = yaml.safe_load(text)
    if not isinstance(params, dict):
        raise ConfigError(f"--params should be a mapping, got {text!r}")
    return params


def experiment_config(args) -> ExperimentConfig:
    overrides = {
        "function": args.function,
        "function_params": _params(args.params),
        "function_file": args.file,
        "methods": args.methods,
        "n_list": args.n,
        "delta_rule": args.delta_rule,
        "epsilon": args.eps,
        "samples": args.samples,
        "alpha_levels": args.alpha_levels,
        "alpha": args.alpha,
        "output": args.out,
        "seed": args.seed,
        "strict": args.strict,
    }
    if args.config is not None:
        return ExperimentConfig.from_yaml(args.config, **overrides)
    return ExperimentConfig(**{k: v for k, v in overrides.items() if v is not None})


def approximate(args) -> int:
    config = experiment_config(args)
    os.makedirs(config.output, exist_ok=True)
    with file_output(os.path.join(config.output, LOG_FILE)):
        job = ApproximationJob(config, dump_dir=config.output).run()
    for report in job.reports:
        print(report)
    return job.exit_code


def check(args) -> int:
    kwargs = {"function": args.function, "function_file": args.file,
              "function_params": _params(args.params), "alpha_levels": args.alpha_levels}
    if args.function is None and args.file is None:
        raise ConfigError("one of --function and --file is needed")
    config = ExperimentConfig(**{k: v for k, v in kwargs.items() if v is not None})
    approx_config = config.approx_config()
    f = experiment_function(config)
    n_list = [int(n) for n in args.n.split(",")]
    f_alpha = alpha_slice(f, args.alpha)
    result = {
        "function": f.name,
        "nested decreasing": check_nested_decreasing(f, approx_config.probes),
        "nested increasing": check_nested_increasing(f, approx_config.probes),
        "gh chain forward": {n: check_gh_chain(f, n, "forward") for n in n_list},
        "gh chain backward": {n: check_gh_chain(f, n, "backward") for n in n_list},
        f"length decreasing at alpha={args.alpha:g}": check_length_monotone(f_alpha, "decreasing"),
        f"length increasing at alpha={args.alpha:g}": check_length_monotone(f_alpha, "increasing"),
        "modulus": {n: [modulus(f, 1 / n).value, modulus(f, 1 / n).kind.value] for n in n_list},
        "modulus property violations": check_modulus_properties(f),
        "level modulus slack": check_level_modulus(f, [1 / n for n in n_list]),
    }
    print(yaml.safe_dump(result, sort_keys=False))
    return 0


def _operand(text: str, grid: AlphaGrid):
    if os.path.exists(text):
        return load_fuzzy_number(text)
    return parse_fuzzy_literal(text, grid)


def diff(args) -> int:
    grid = AlphaGrid.uniform(args.levels)
    u = _operand(args.u, grid)
    v = _operand(args.v, grid)
    result = {"gh cases": sorted(gh_cases(u, v))}
    result["gh"] = gh_difference(u, v).to_dict() if result["gh cases"] else None
    result["g"] = g_difference(u, v).to_dict()
    print(json.dumps(result, indent=2))
    return 0


def selftest(args) -> int:
    import pytest

    os.environ[SEED_ENV_KEY] = str(args.seed)
    return int(pytest.main(["--pyargs", "fuzzjack", f"--hypothesis-seed={args.seed}"] + args.pytest_args))


_verbs = {"approximate": approximate, "check": check, "diff": diff, "selftest": selftest}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    set_level(logging.DEBUG if args.verbose else logging.INFO)
    try:
        return _verbs[args.verb](args)
    except FuzzjackError as e:
        logger.error(str(e))
        return 2
    except OSError as e:
        logger.error(f"file system error: {e}")
        return 3


if __name__ == "__main__":
    sys.exit(main())

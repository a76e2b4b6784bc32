# -*- coding: utf-8 -*-

"""
Run an experiment file and print the observed convergence order of every method,
the slope of log(sup distance) against log(n).
"""

import logging
import os
import sys

import numpy as np

from fuzzjack.harness import run_experiment
from fuzzjack.utils import ExperimentConfig
from fuzzjack.utils import log


def convergence_order(ns, distances):
    ns = np.asarray(ns, dtype=float)
    distances = np.asarray(distances, dtype=float)
    if len(ns) < 2 or np.any(distances <= 0):
        return np.nan
    slope, _ = np.polyfit(np.log(ns), np.log(distances), 1)
    return -slope


if __name__ == "__main__":
    if len(sys.argv) != 2:
        print("No or more than one parameter file are provided, abort")
        exit(1)
    parameter_path = sys.argv[1]
    config = ExperimentConfig.from_yaml(parameter_path)
    if config.function_file is not None and not os.path.isabs(config.function_file):
        config.function_file = os.path.join(os.path.dirname(os.path.abspath(parameter_path)), config.function_file)
    os.makedirs(config.output, exist_ok=True)
    log.set_level(logging.INFO)
    with log.file_output(os.path.join(config.output, "convergence.log")):
        reports = run_experiment(config)
    for method in config.methods:
        runs = [r for r in reports if r.method is method and not r.skipped]
        if not runs:
            print(f"{method.value}: skipped")
            continue
        order = convergence_order([r.n for r in runs], [r.sup_distance for r in runs])
        verdicts = ", ".join(r.verdict.value for r in runs)
        print(f"{method.value}: order {order:.2f}, verdicts {verdicts}")

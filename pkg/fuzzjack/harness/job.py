# -*- coding: utf-8 -*-

import logging
from datetime import datetime
from typing import List

from fuzzjack.approx.builders import (
    build_g,
    build_gh_dec,
    build_gh_inc,
    build_interval,
    build_trapezoid,
)
from fuzzjack.approx.report import ErrorReport, sup_distance, sup_distance_interval
from fuzzjack.fuzzy.catalog import catalog
from fuzzjack.fuzzy.function import FuzzyFunction, alpha_slice
from fuzzjack.fuzzy.io import load_function
from fuzzjack.fuzzy.number import AlphaGrid
from fuzzjack.harness.emit import emit_report
from fuzzjack.utils.configs import ExperimentConfig, Method, Verdict
from fuzzjack.utils.errors import GHDifferenceUndefined, HypothesisViolated

logger = logging.getLogger(__name__)


def experiment_function(config: ExperimentConfig) -> FuzzyFunction:
    """The target function of ``config``: a catalog entry or a JSON function file."""
    if config.function is not None:
        return catalog(config.function, grid=AlphaGrid.uniform(config.alpha_levels), **config.function_params)
    f = load_function(config.function_file)
    if f.grid.m != config.alpha_levels:
        logger.info(f"{config.function_file} brings its own grid of {f.grid.m} subintervals")
    return f


class ApproximationJob(object):
    """
    Runs every (method, n) pair of an `ExperimentConfig`, one report each.
    Methods whose hypotheses fail on the function are recorded as skipped, or
    raise in strict mode.

    Args:
        config (ExperimentConfig): the experiment.
        dump_dir (str): where the report files go, ``None`` to keep them in memory.
    """

    def __init__(self, config: ExperimentConfig, dump_dir: str = None):
        logger.info(f"Creating approximation job. dump_dir: {dump_dir}")
        logger.info(f"config: {config}")
        self.config = config
        self.approx_config = config.approx_config()
        self.dump_dir = dump_dir
        self.function = self.init_function()
        logger.info(f"target: {self.function}")
        if Method.interval_gh in config.methods:
            # off-grid levels are rejected before any step runs
            self.function.grid.index(config.alpha)
        self.reports: List[ErrorReport] = []

    def init_function(self) -> FuzzyFunction:
        return experiment_function(self.config)

    def run(self) -> "ApproximationJob":
        wall_times = [datetime.now()]
        steps = [(method, n) for method in self.config.methods for n in self.config.n_list]
        for i, (method, n) in enumerate(steps):
            logger.info(f"step {i + 1}/{len(steps)}: {method.value}, n={n} begin.")
            report = self.run_single(method, n)
            self.process_report(report)
            wall_times.append(datetime.now())
            logger.info(f"step {i + 1} complete, time cost {wall_times[-1] - wall_times[-2]}.")
        if self.dump_dir is not None:
            self.dump_dict()
        logger.info(f"Normal termination. Time cost: {wall_times[-1] - wall_times[0]}")
        return self

    def run_single(self, method: Method, n: int) -> ErrorReport:
        config = self.config
        delta = config.delta(n)
        eps = None if method is Method.trapezoid else config.epsilon
        try:
            return self._measure(method, n, delta)
        except (HypothesisViolated, GHDifferenceUndefined) as e:
            if config.strict:
                raise
            reason = e.reason if isinstance(e, HypothesisViolated) else str(e)
            logger.warning(f"{method.value} n={n} skipped: {reason}")
            return ErrorReport.skipped_run(method, n, delta, eps, reason, function=self.function.name)

    def _measure(self, method: Method, n: int, delta: float) -> ErrorReport:
        f = self.function
        config = self.config
        approx_config = self.approx_config
        measure_args = dict(samples=config.samples, report_tol=approx_config.report_tol,
                            modulus_density=approx_config.modulus_density)
        if method is Method.interval_gh:
            f_alpha = alpha_slice(f, config.alpha)
            approximant = build_interval(f_alpha, n, config.epsilon, delta, approx_config)
            return sup_distance_interval(f_alpha, approximant, alpha=config.alpha, **measure_args)
        if method is Method.trapezoid:
            approximant = build_trapezoid(f, n, delta)
        else:
            builder = {Method.gh_dec: build_gh_dec, Method.gh_inc: build_gh_inc, Method.g_diff: build_g}[method]
            approximant = builder(f, n, config.epsilon, delta, approx_config)
        return sup_distance(f, approximant, **measure_args)

    def process_report(self, report: ErrorReport):
        self.reports.append(report)

    def get_dump_dict(self):
        return self.config.to_dict()

    def dump_dict(self) -> List[str]:
        return emit_report(self.reports, self.dump_dir, config=self.get_dump_dict())

    @property
    def all_passed(self) -> bool:
        """No report with a certified bound failed."""
        return all(r.verdict is not Verdict.failed for r in self.reports)

    @property
    def exit_code(self) -> int:
        return 0 if self.all_passed else 1


def run_experiment(config: ExperimentConfig) -> List[ErrorReport]:
    """
    Run ``config`` and write its report files into ``config.output``.

    >>> from fuzzjack.utils.configs import ExperimentConfig
    >>> import tempfile
    >>> with tempfile.TemporaryDirectory() as out:
    ...     reports = run_experiment(ExperimentConfig(function="constant", methods="trapezoid",
    ...                                               n_list=[2], samples=9, alpha_levels=4, output=out))
    >>> reports[0].verdict.value
    'true'
    """
    return ApproximationJob(config, dump_dir=config.output).run().reports

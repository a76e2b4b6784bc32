# -*- coding: utf-8 -*-

from fuzzjack.approx.approximant import Approximant, IntervalApproximant, eval_approximant
from fuzzjack.approx.builders import (
    default_delta,
    epsilon_prime,
    build_gh_dec,
    build_gh_inc,
    build_g,
    build_trapezoid,
    build_interval_gh_dec,
    build_interval_gh_inc,
    build_interval,
)
from fuzzjack.approx.report import ErrorReport, sup_distance, sup_distance_interval, sample_points

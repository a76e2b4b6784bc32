# -*- coding: utf-8 -*-

from fuzzjack.utils.log import env_level, init_log


# FUZZJACK_LOG_LEVEL takes a level name or number, e.g. INFO or 20
init_log(env_level())

del env_level, init_log


# user interfaces
from fuzzjack.interval import Interval
from fuzzjack.fuzzy import (
    AlphaGrid,
    FuzzyNumber,
    FuzzyFunction,
    SampledFuzzyFunction,
    catalog,
    interval_catalog,
    load_function,
)
from fuzzjack.smoothstep import jewett_poly, psi_family, phi_family
from fuzzjack.approx import (
    build_gh_dec,
    build_gh_inc,
    build_g,
    build_trapezoid,
    build_interval,
    sup_distance,
    ErrorReport,
)
from fuzzjack.harness import run_experiment, ApproximationJob
from fuzzjack.utils import ApproxConfig, ExperimentConfig, Method

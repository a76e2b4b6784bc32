# -*- coding: utf-8 -*-

from fuzzjack.interval.interval import (
    Interval,
    length,
    hausdorff,
    gh_diff_interval,
    gh_case_interval,
    minkowski_add,
    scale_interval,
)

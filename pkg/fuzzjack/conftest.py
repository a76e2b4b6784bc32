# -*- coding: utf-8 -*-
import os

from hypothesis import HealthCheck, settings

# array arithmetic on 100-level grids can exceed the default per-example deadline
settings.register_profile("fuzzjack", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", parent=settings.get_profile("fuzzjack"), max_examples=500)
settings.load_profile(os.environ.get("FUZZJACK_HYPOTHESIS_PROFILE", "fuzzjack"))

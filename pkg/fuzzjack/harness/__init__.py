# -*- coding: utf-8 -*-

from fuzzjack.harness.emit import emit_report, load_reports
from fuzzjack.harness.job import ApproximationJob, run_experiment, experiment_function

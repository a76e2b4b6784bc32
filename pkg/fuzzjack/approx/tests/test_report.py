# -*- coding: utf-8 -*-

import json

import numpy as np
import pytest

from fuzzjack.approx.builders import build_gh_dec, build_trapezoid
from fuzzjack.approx.report import ErrorReport, bound_value, sample_points, sup_distance
from fuzzjack.fuzzy.catalog import catalog
from fuzzjack.fuzzy.function import CallableFuzzyFunction
from fuzzjack.fuzzy.number import crisp
from fuzzjack.tests.parameter import small_grid
from fuzzjack.utils.configs import Method, ModulusKind, Verdict
from fuzzjack.utils.errors import InvalidParams


@pytest.mark.parametrize("method, n, omega, eps, expected", [
    (Method.gh_dec, 4, 0.5, 0.01, 1.01),
    (Method.gh_inc, 8, 0.25, 0.001, 0.501),
    (Method.g_diff, 2, 0.5, 0.01, 3.01),
    (Method.trapezoid, 16, 0.1, None, 0.3),
    (Method.interval_gh, 4, 0.2, 0.1, 0.5),
])
def test_bound_value(method, n, omega, eps, expected):
    assert bound_value(method, n, omega, eps) == pytest.approx(expected)


def test_sample_points():
    xs = sample_points(2049, 8, 1 / 32)
    assert xs[0] == 0 and xs[-1] == 1
    assert np.all(np.diff(xs) > 0)
    for j in range(9):
        assert np.any(xs == j / 8)
    with pytest.raises(InvalidParams):
        sample_points(1, 8, 1 / 32)


def test_constant_trapezoid():
    f = catalog("constant")
    report = sup_distance(f, build_trapezoid(f, 4), samples=129)
    assert report.sup_distance == pytest.approx(0, abs=1e-12)
    assert report.bound_value == 0
    assert report.verdict is Verdict.passed


def test_scaled_exp_passes():
    f = catalog("scaled_exp")
    report = sup_distance(f, build_gh_dec(f, 8, 1e-3))
    assert report.passed
    assert report.to_dict()["pass"] == "true"
    assert report.modulus_kind is ModulusKind.analytic
    assert report.sup_distance == report.per_sample[:, 1].max()
    assert report.per_sample.shape[1] == 2
    assert "gh_dec n=8" in str(report)


def test_indicative():
    f = CallableFuzzyFunction(lambda x: crisp(np.sin(3 * x), small_grid), small_grid, name="sine")
    report = sup_distance(f, build_trapezoid(f, 4), samples=65)
    assert report.modulus_kind is ModulusKind.lower_estimate
    assert report.verdict is Verdict.indicative
    assert report.to_dict()["pass"] == "indicative"


def test_verdicts():
    report = ErrorReport(Method.gh_dec, 4, 1 / 16, 1e-3, sup_distance=0.5, modulus_value=0.1,
                         modulus_kind=ModulusKind.certified, bound_value=0.201,
                         per_sample=[[0, 0.5], [1, 0.0]])
    assert not report.passed
    assert report.verdict is Verdict.failed
    assert report.bound_formula == "2*omega(f,1/n) + eps"
    skipped = ErrorReport.skipped_run(Method.gh_inc, 4, 1 / 16, 1e-3, "nesting hypothesis failed")
    assert skipped.skipped
    assert skipped.passed is None
    assert skipped.verdict is Verdict.skipped
    assert "skipped" in str(skipped)


def test_dict_round_trip():
    f = catalog("scaled_linear", grid=small_grid)
    report = sup_distance(f, build_trapezoid(f, 4), samples=33)
    d = json.loads(json.dumps(report.to_dict()))
    assert set(d) >= {"method", "n", "delta", "eps", "sup_distance", "modulus", "bound", "pass", "per_sample"}
    other = ErrorReport.from_dict(d)
    assert other.method is Method.trapezoid
    assert other.eps is None
    assert other.sup_distance == report.sup_distance
    assert other.verdict is report.verdict
    assert np.array_equal(other.per_sample, report.per_sample)
    skipped = ErrorReport.skipped_run(Method.g_diff, 8, 1 / 32, 1e-3, "nesting hypothesis failed")
    assert ErrorReport.from_dict(skipped.to_dict()).reason == "nesting hypothesis failed"

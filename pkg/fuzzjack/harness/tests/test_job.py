# -*- coding: utf-8 -*-

import os

import pytest

from fuzzjack.approx.builders import NESTING_FAILED
from fuzzjack.approx.report import ErrorReport
from fuzzjack.fuzzy.catalog import catalog
from fuzzjack.fuzzy.io import dump_function
from fuzzjack.fuzzy.number import AlphaGrid, from_trapezoidal
from fuzzjack.fuzzy.function import SampledFuzzyFunction
from fuzzjack.harness.emit import CONVERGENCE_FILE, REPORT_FILE, load_reports
from fuzzjack.harness.job import ApproximationJob, run_experiment
from fuzzjack.utils.configs import ExperimentConfig, Method, ModulusKind, Verdict
from fuzzjack.utils.errors import HypothesisViolated, InvalidParams, UnknownCatalogEntry


@pytest.fixture(autouse=True)
def no_out_override(monkeypatch):
    monkeypatch.delenv("FUZZJACK_OUT", raising=False)


def config(**kwargs):
    kwargs.setdefault("samples", 257)
    kwargs.setdefault("alpha_levels", 20)
    return ExperimentConfig(**kwargs)


def test_routing():
    job = ApproximationJob(config(function="scaled_exp", methods="all", n_list=[4, 8, 16])).run()
    assert len(job.reports) == 12
    skipped = [r for r in job.reports if r.skipped]
    assert [(r.method, r.n) for r in skipped] == [(Method.gh_inc, n) for n in (4, 8, 16)]
    assert all(r.reason == NESTING_FAILED for r in skipped)
    assert all(r.verdict is Verdict.passed for r in job.reports if not r.skipped)
    assert job.exit_code == 0


def test_skipped_nesting():
    job = ApproximationJob(config(function="bump_width", methods=["gh_dec"], n_list=[8])).run()
    assert len(job.reports) == 1
    assert job.reports[0].verdict is Verdict.skipped
    assert job.reports[0].reason == "nesting hypothesis failed"
    assert job.exit_code == 0


def test_strict():
    job = ApproximationJob(config(function="bump_width", methods="gh_dec", n_list=[8], strict=True))
    with pytest.raises(HypothesisViolated):
        job.run()


def test_broken_chain_skipped(tmp_path):
    g = AlphaGrid.uniform(4)
    u = from_trapezoidal(0, 1, 3, 4, g)
    v = from_trapezoidal(1, 2.5, 2.5, 3, g)
    path = str(tmp_path / "chain.json")
    dump_function(SampledFuzzyFunction([0, 1], [u.cuts, v.cuts], g), path)
    job = ApproximationJob(config(function_file=path, methods="gh_dec,g_diff", n_list=[1])).run()
    assert "broken between nodes 0 and 1" in job.reports[0].reason
    assert job.reports[1].verdict is Verdict.passed


def test_constant():
    eps = 1e-3
    job = ApproximationJob(config(function="constant", methods="all", n_list=[4, 8], epsilon=eps)).run()
    assert len(job.reports) == 8
    assert all(r.sup_distance <= eps for r in job.reports)


def test_interval_method():
    job = ApproximationJob(config(function="scaled_exp", methods="interval_gh", n_list=[4, 8], alpha=0.5)).run()
    for report in job.reports:
        assert report.method is Method.interval_gh
        assert report.alpha == 0.5
        assert report.verdict is Verdict.passed


def test_interval_alpha_off_grid(tmp_path):
    out = str(tmp_path / "out")
    with pytest.raises(InvalidParams, match="0.333"):
        ApproximationJob(config(function="scaled_exp", methods="trapezoid,interval_gh", n_list=[4],
                                alpha=0.333, output=out), dump_dir=out)
    assert not os.path.exists(out)
    # the level only matters to interval_gh
    job = ApproximationJob(config(function="scaled_exp", methods="trapezoid", n_list=[4], alpha=0.333)).run()
    assert job.reports[0].verdict is Verdict.passed


def test_unknown_function():
    with pytest.raises(UnknownCatalogEntry):
        ApproximationJob(config(function="sawtooth"))


def test_exit_code():
    job = ApproximationJob(config(function="constant", methods="trapezoid", n_list=[2]))
    job.process_report(ErrorReport(Method.gh_dec, 4, 1 / 16, 1e-3, sup_distance=1.0, modulus_value=0.1,
                                   modulus_kind=ModulusKind.analytic, bound_value=0.201))
    assert not job.all_passed
    assert job.exit_code == 1


def test_run_experiment(tmp_path):
    out = str(tmp_path / "out")
    reports = run_experiment(config(function="scaled_exp", methods="gh_dec,gh_inc", n_list=[4],
                                    function_params={"u": [-1, 0, 1]}, output=out))
    assert os.path.exists(os.path.join(out, REPORT_FILE))
    assert os.path.exists(os.path.join(out, CONVERGENCE_FILE))
    assert os.path.exists(os.path.join(out, "errors_gh_dec_4.csv"))
    assert not os.path.exists(os.path.join(out, "errors_gh_inc_4.csv"))
    loaded = load_reports(out)
    assert [r.verdict for r in loaded] == [r.verdict for r in reports] == [Verdict.passed, Verdict.skipped]


def test_function_file(tmp_path):
    path = str(tmp_path / "f.json")
    dump_function(catalog("scaled_linear", grid=AlphaGrid.uniform(10)), path, xs=[0, 0.25, 0.5, 0.75, 1])
    job = ApproximationJob(config(function_file=path, methods="trapezoid,gh_inc", n_list=[4])).run()
    assert job.function.kind == "sampled"
    for report in job.reports:
        assert report.modulus_kind is ModulusKind.certified
        assert report.verdict is Verdict.passed

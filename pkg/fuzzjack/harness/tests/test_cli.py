# -*- coding: utf-8 -*-

import json
import os

import numpy as np
import pytest
import yaml

from fuzzjack.harness.cli import LOG_FILE, main
from fuzzjack.harness.emit import CONVERGENCE_FILE, REPORT_FILE, load_reports
from fuzzjack.utils.configs import Verdict


@pytest.fixture(autouse=True)
def no_out_override(monkeypatch):
    monkeypatch.delenv("FUZZJACK_OUT", raising=False)


def test_approximate(tmp_path, capsys):
    out = str(tmp_path / "out")
    code = main(["approximate", "--function", "constant", "--methods", "trapezoid",
                 "--n", "2", "--samples", "9", "--out", out])
    assert code == 0
    for name in (REPORT_FILE, CONVERGENCE_FILE, "errors_trapezoid_2.csv", LOG_FILE):
        assert os.path.exists(os.path.join(out, name))
    reports = load_reports(out)
    assert len(reports) == 1 and reports[0].verdict is Verdict.passed
    assert "trapezoid n=2" in capsys.readouterr().out


def test_approximate_config_file(tmp_path):
    out = str(tmp_path / "out")
    path = str(tmp_path / "exp.yaml")
    with open(path, "w", encoding="utf-8") as fout:
        yaml.safe_dump({"function": "scaled_linear", "methods": "gh_inc", "n list": [2, 4],
                        "samples": 65, "alpha levels": 10, "output dir": str(tmp_path / "unused")}, fout)
    code = main(["approximate", "--config", path, "--out", out])
    assert code == 0
    assert [r.n for r in load_reports(out)] == [2, 4]


@pytest.mark.parametrize("args, code", [
    (["--function", "sawtooth"], 2),
    (["--function", "constant", "--eps", "0.7"], 2),
    (["--function", "constant", "--methods", "simpson"], 2),
    (["--function", "constant", "--methods", "interval_gh", "--alpha", "0.333"], 2),
    (["--file", "no_such_function.json"], 3),
])
def test_approximate_failures(tmp_path, args, code):
    assert main(["approximate", "--out", str(tmp_path), "--n", "2", "--samples", "9"] + args) == code


def test_diff(capsys):
    assert main(["diff", "<12,15,19>", "<5,9,11>", "--levels", "10"]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result["gh cases"] == []
    assert result["gh"] is None
    assert result["g"]["cuts"][0] == pytest.approx([6, 8])
    assert result["g"]["cuts"][-1] == pytest.approx([6, 6])


def test_diff_gh(capsys):
    assert main(["diff", "<12,15,19>", "<5,7,9>", "--levels", "4"]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result["gh cases"]
    assert result["gh"]["cuts"][0] == pytest.approx([7, 10])
    assert result["gh cases"] == [1]
    assert np.allclose(result["gh"]["cuts"], result["g"]["cuts"])


def test_check(capsys):
    assert main(["check", "--function", "bump_width", "--n", "4", "--alpha-levels", "10"]) == 0
    result = yaml.safe_load(capsys.readouterr().out)
    assert result["function"] == "bump_width"
    assert result["nested decreasing"] is False
    assert result["nested increasing"] is False
    assert set(result["gh chain forward"]) == {4}
    assert result["modulus"][4][1] == "analytic"


def test_check_needs_function():
    assert main(["check"]) == 2

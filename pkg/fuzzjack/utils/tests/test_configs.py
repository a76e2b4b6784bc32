# -*- coding: utf-8 -*-

import pytest
import yaml

from fuzzjack.utils.configs import ApproxConfig, ExperimentConfig, Method, ModulusKind
from fuzzjack.utils.errors import ConfigError


@pytest.fixture(autouse=True)
def no_out_override(monkeypatch):
    monkeypatch.delenv("FUZZJACK_OUT", raising=False)


@pytest.mark.parametrize("value, expected", [
    ("all", Method.fuzzy_methods()),
    ("gh_dec,trapezoid", [Method.gh_dec, Method.trapezoid]),
    (" g_diff , interval_gh ", [Method.g_diff, Method.interval_gh]),
    (["gh_inc", Method.gh_inc, "all"], [Method.gh_inc, Method.gh_dec, Method.g_diff, Method.trapezoid]),
])
def test_parse_methods(value, expected):
    assert Method.parse_list(value) == expected


def test_unknown_method():
    with pytest.raises(ConfigError, match="simpson"):
        Method.parse_list("gh_dec,simpson")


def test_modulus_kind():
    assert ModulusKind.analytic.is_upper_bound
    assert ModulusKind.certified.is_upper_bound
    assert not ModulusKind("lower estimate").is_upper_bound


def test_defaults():
    config = ExperimentConfig(function="scaled_exp")
    assert config.methods == Method.fuzzy_methods()
    assert config.n_list == [4, 8, 16]
    assert config.delta(4) == 1 / 16
    assert config.epsilon == 1e-3
    assert config.approx_config().alpha_levels == 100
    assert config.output == "./fuzzjack_out"


@pytest.mark.parametrize("kwargs", [
    dict(),
    dict(function="scaled_exp", function_file="f.json"),
    dict(function="scaled_exp", methods=""),
    dict(function="scaled_exp", n_list=[4, 0]),
    dict(function="scaled_exp", n_list=["four"]),
    dict(function="scaled_exp", delta_rule=1.0),
    dict(function="scaled_exp", epsilon=0.5),
    dict(function="scaled_exp", epsilon=0),
    dict(function="scaled_exp", samples=1),
    dict(function="scaled_exp", alpha_levels=0),
    dict(function="scaled_exp", alpha=1.5),
])
def test_invalid(kwargs):
    with pytest.raises(ConfigError):
        ExperimentConfig(**kwargs)


def test_n_list_forms():
    assert ExperimentConfig(function="constant", n_list="2,4").n_list == [2, 4]
    assert ExperimentConfig(function="constant", n_list=8).n_list == [8]
    config = ExperimentConfig(function="constant", delta_rule=0.25)
    assert config.delta(2) == 1 / 16


def test_from_yaml(tmp_path):
    path = str(tmp_path / "exp.yaml")
    with open(path, "w", encoding="utf-8") as fout:
        fout.write(
            "function: translated\n"
            "function params:\n"
            "  amplitude: 2.0\n"
            "methods: gh_dec,g_diff\n"
            "n list: [2, 4, 8]\n"
            "delta rule: 0.5\n"
            "alpha levels: 50\n"
            "output dir: out\n"
        )
    config = ExperimentConfig.from_yaml(path, samples=65, epsilon=None)
    assert config.function_params == {"amplitude": 2.0}
    assert config.methods == [Method.gh_dec, Method.g_diff]
    assert config.n_list == [2, 4, 8]
    assert config.alpha_levels == 50
    assert config.samples == 65
    assert config.epsilon == 1e-3
    assert config.output == "out"


def test_yaml_errors(tmp_path):
    path = str(tmp_path / "exp.yaml")
    with open(path, "w", encoding="utf-8") as fout:
        yaml.safe_dump({"function": "constant", "n_list": [2]}, fout)
    with pytest.raises(ConfigError, match="n_list"):
        ExperimentConfig.from_yaml(path)
    with open(path, "w", encoding="utf-8") as fout:
        fout.write("- constant\n")
    with pytest.raises(ConfigError):
        ExperimentConfig.from_yaml(path)


def test_dict_round_trip():
    config = ExperimentConfig(function="scaled_exp", function_params={"u": [0, 1, 2]},
                              methods="trapezoid", n_list=[3], strict=True)
    d = yaml.safe_load(yaml.safe_dump(config.to_dict()))
    other = ExperimentConfig.from_dict(d)
    assert other.to_dict() == config.to_dict()
    copied = config.copy()
    copied.n_list = [5]
    copied.function_params["u"] = [1]
    assert config.n_list == [3]
    assert config.function_params == {"u": [0, 1, 2]}
    assert "n list: [3]" in str(config)


def test_env_override(monkeypatch):
    monkeypatch.setenv("FUZZJACK_OUT", "/tmp/elsewhere")
    assert ExperimentConfig(function="constant", output="mine").output == "/tmp/elsewhere"


def test_approx_config():
    config = ApproxConfig(alpha_levels=20, probes=33)
    assert config.tol_nested == 1e-12
    copied = config.copy()
    copied.probes = 5
    assert config.probes == 33
    for attr, value in (("probes", 1), ("alpha_levels", 2.5), ("alpha_levels", 0)):
        with pytest.raises(ConfigError):
            setattr(config, attr, value)
    assert "alpha_levels: 20" in str(config)

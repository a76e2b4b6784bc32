# -*- coding: utf-8 -*-

import logging

import numpy as np
import pytest

from fuzzjack.utils import log
from fuzzjack.utils.errors import ConfigError


@pytest.mark.parametrize("value, expected", [
    (10, 10),
    ("20", 20),
    (" warning ", logging.WARNING),
    ("DEBUG", logging.DEBUG),
])
def test_parse_level(value, expected):
    assert log.parse_level(value) == expected


def test_bad_level():
    with pytest.raises(ConfigError):
        log.parse_level("chatty")


def test_env_level(monkeypatch):
    monkeypatch.delenv(log.LEVEL_ENV_KEY, raising=False)
    assert log.env_level() == logging.WARNING
    monkeypatch.setenv(log.LEVEL_ENV_KEY, "info")
    assert log.env_level() == logging.INFO
    monkeypatch.setenv(log.LEVEL_ENV_KEY, "chatty")
    assert log.env_level(default=logging.ERROR) == logging.ERROR


def test_file_output(tmp_path):
    path = str(tmp_path / "run.log")
    logger = logging.getLogger("fuzzjack.tests.file_output")
    old_level = log.package_logger.level
    log.set_level("INFO")
    try:
        with log.file_output(path) as handler:
            assert handler in log.package_logger.handlers
            logger.info("inside the block")
        logger.info("after the block")
    finally:
        log.package_logger.setLevel(old_level)
    assert handler not in log.package_logger.handlers
    with open(path, encoding="utf-8") as fin:
        content = fin.read()
    assert "[INFO] inside the block" in content
    assert "after the block" not in content


def test_other_loggers_filtered(tmp_path):
    path = str(tmp_path / "run.log")
    with log.file_output(path):
        log.package_logger.warning("ours")
        logging.getLogger("somebody.else").warning("theirs")
    with open(path, encoding="utf-8") as fin:
        content = fin.read()
    assert "ours" in content
    assert "theirs" not in content


def test_np_errors():
    with pytest.raises(FloatingPointError):
        np.log(np.zeros(1))
    with pytest.raises(FloatingPointError):
        np.exp(np.full(1, 1000.0))

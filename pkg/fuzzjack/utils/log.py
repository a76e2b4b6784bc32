# -*- coding: utf-8 -*-

"""
Logging of the ``fuzzjack`` package and the numpy floating point error policy.

Library use stays quiet (``WARNING``) unless ``FUZZJACK_LOG_LEVEL`` says otherwise;
the command line raises the level and mirrors every run into a log file next to its
reports.
"""

import contextlib
import logging
import os
from logging import DEBUG

import numpy as np

from fuzzjack.utils.errors import ConfigError

LEVEL_ENV_KEY = "FUZZJACK_LOG_LEVEL"

package_logger = logging.getLogger("fuzzjack")
default_stream_handler = logging.StreamHandler()
default_formatter = logging.Formatter("%(asctime)s[%(levelname)s] %(message)s")


def parse_level(value) -> int:
    """
    A logging level from an int, a numeric string or a level name.

    >>> parse_level("10"), parse_level("info"), parse_level(30)
    (10, 20, 30)
    """
    if isinstance(value, int):
        return value
    text = str(value).strip()
    if text.lstrip("-").isdigit():
        return int(text)
    level = logging.getLevelName(text.upper())
    if not isinstance(level, int):
        raise ConfigError(f"unknown log level {value!r}")
    return level


def env_level(default=logging.WARNING) -> int:
    """The level set by ``FUZZJACK_LOG_LEVEL``, ``default`` if unset or unreadable."""
    value = os.environ.get(LEVEL_ENV_KEY)
    if not value:
        return default
    try:
        return parse_level(value)
    except ConfigError:
        return default


def init_log(level=logging.WARNING):
    package_logger.setLevel(level)
    default_stream_handler.setLevel(DEBUG)
    default_stream_handler.setFormatter(default_formatter)
    if default_stream_handler not in package_logger.handlers:
        package_logger.addHandler(default_stream_handler)


def set_level(level):
    package_logger.setLevel(parse_level(level))


def set_stream_level(level):
    default_stream_handler.setLevel(parse_level(level))


def disable_stream_output():
    if default_stream_handler in package_logger.handlers:
        package_logger.removeHandler(default_stream_handler)


def register_file_output(file_path, mode="w", level=DEBUG) -> logging.FileHandler:
    file_handler = logging.FileHandler(file_path, mode=mode, encoding="utf-8")
    file_handler.setLevel(level)
    file_handler.setFormatter(default_formatter)
    file_handler.addFilter(logging.Filter("fuzzjack"))
    package_logger.addHandler(file_handler)
    return file_handler


def remove_file_output(file_handler: logging.FileHandler):
    package_logger.removeHandler(file_handler)
    file_handler.close()


@contextlib.contextmanager
def file_output(file_path, mode="w", level=DEBUG):
    """Copy the package log into ``file_path`` while the block runs."""
    handler = register_file_output(file_path, mode, level)
    try:
        yield handler
    finally:
        remove_file_output(handler)


# overflow and invalid operations are bugs, log(0) sites opt out with np.errstate
NP_ERRCONFIG = {"divide": "raise", "over": "raise", "under": "ignore", "invalid": "raise"}

DEFAULT_NP_ERRCONFIG = np.seterr(**NP_ERRCONFIG)

# -*- coding: utf-8 -*-

"""
JSON files of fuzzy numbers and sampled fuzzy functions.

A fuzzy number file is ``{"levels": [...], "cuts": [[lo, hi], ...]}``.
A function file is ``{"levels": [...], "samples": [{"x": x, "cuts": [[lo, hi], ...]}, ...]}``.
Floats are written with ``repr`` precision so a dump reads back bit for bit.
"""

import json
import logging
import numbers
from typing import Dict, Sequence

import numpy as np

from fuzzjack.fuzzy.function import FuzzyFunction, SampledFuzzyFunction
from fuzzjack.fuzzy.number import AlphaGrid, FuzzyNumber
from fuzzjack.utils.errors import InvalidParams, InvariantError, SchemaError
from fuzzjack.utils.utils import unit_points

logger = logging.getLogger(__name__)


def _read_json(path):
    with open(path, encoding="utf-8") as fin:
        try:
            return json.load(fin)
        except json.JSONDecodeError as e:
            raise SchemaError("$", f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from e


def _is_number(v) -> bool:
    return isinstance(v, numbers.Real) and not isinstance(v, bool) and np.isfinite(v)


def _parse_grid(content: Dict) -> AlphaGrid:
    if "levels" not in content:
        raise SchemaError("levels", "missing")
    levels = content["levels"]
    if not isinstance(levels, list) or not all(_is_number(v) for v in levels):
        raise SchemaError("levels", "should be a list of finite numbers")
    try:
        return AlphaGrid(levels)
    except InvalidParams as e:
        raise SchemaError("levels", str(e)) from e


def _parse_cuts(cuts, n_levels: int, path: str) -> np.ndarray:
    if not isinstance(cuts, list):
        raise SchemaError(path, "should be a list of [lo, hi] pairs")
    if len(cuts) != n_levels:
        raise SchemaError(path, f"expected {n_levels} cuts, one per level, got {len(cuts)}")
    for j, pair in enumerate(cuts):
        if not isinstance(pair, list) or len(pair) != 2 or not all(_is_number(v) for v in pair):
            raise SchemaError(f"{path}[{j}]", "should be a pair of finite numbers")
    return np.array(cuts, dtype=float)


def _check_sample_cuts(cuts: np.ndarray, where: str):
    lo, hi = cuts[:, 0], cuts[:, 1]
    bad = np.nonzero(lo > hi)[0]
    if len(bad):
        raise InvariantError(f"lo > hi at {where} level {bad[0]}")
    bad = np.nonzero((np.diff(lo) < 0) | (np.diff(hi) > 0))[0]
    if len(bad):
        j = bad[0]
        raise InvariantError(f"cuts at levels {j} and {j + 1} of {where} are not nested")


def load_fuzzy_number(path) -> FuzzyNumber:
    content = _read_json(path)
    if not isinstance(content, dict):
        raise SchemaError("$", "expected an object")
    grid = _parse_grid(content)
    if "cuts" not in content:
        raise SchemaError("cuts", "missing")
    cuts = _parse_cuts(content["cuts"], len(grid), "cuts")
    _check_sample_cuts(cuts, "the number")
    return FuzzyNumber(grid, cuts)


def dump_fuzzy_number(u: FuzzyNumber, path):
    with open(path, "w", encoding="utf-8") as fout:
        json.dump(u.to_dict(), fout, indent=2)


def load_function(path) -> SampledFuzzyFunction:
    """
    Read a sampled fuzzy function.

    Raises:
        SchemaError: the file does not follow the schema, the message starts with the field path.
        InvariantError: the data is well formed but a sample is not a fuzzy number or the sample
            points are not ``0 = x_0 < ... < x_N = 1``.
    """
    content = _read_json(path)
    if not isinstance(content, dict):
        raise SchemaError("$", "expected an object")
    grid = _parse_grid(content)
    samples = content.get("samples")
    if not isinstance(samples, list) or len(samples) < 2:
        raise SchemaError("samples", "should be a list of at least 2 samples")
    xs = []
    cuts = []
    for i, sample in enumerate(samples):
        if not isinstance(sample, dict):
            raise SchemaError(f"samples[{i}]", "should be an object with keys x and cuts")
        if not _is_number(sample.get("x")):
            raise SchemaError(f"samples[{i}].x", "should be a finite number")
        xs.append(float(sample["x"]))
        cuts.append(_parse_cuts(sample.get("cuts"), len(grid), f"samples[{i}].cuts"))
    for i, c in enumerate(cuts):
        _check_sample_cuts(c, f"sample {i}")
    logger.info(f"loaded {len(xs)} samples on {len(grid)} levels from {path}")
    return SampledFuzzyFunction(xs, np.stack(cuts), grid, name=str(path))


def function_to_dict(f: FuzzyFunction, xs: Sequence[float] = None) -> Dict:
    if xs is None:
        xs = f.xs if isinstance(f, SampledFuzzyFunction) else unit_points(101)
    xs = np.asarray(xs, dtype=float)
    cuts = f.evaluate(xs)
    return {
        "levels": f.grid.to_list(),
        "samples": [{"x": float(x), "cuts": c.tolist()} for x, c in zip(xs, cuts)],
    }


def dump_function(f: FuzzyFunction, path, xs: Sequence[float] = None):
    """
    Write ``f`` sampled at ``xs`` in the format read by `load_function`. Sampled functions
    default to their own sample points, others to 101 uniform points.
    """
    with open(path, "w", encoding="utf-8") as fout:
        json.dump(function_to_dict(f, xs), fout, indent=2)

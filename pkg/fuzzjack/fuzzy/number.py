# -*- coding: utf-8 -*-

"""
Fuzzy numbers stored as nested families of :math:`\\alpha`-cuts on a finite grid
of levels :math:`0 = \\lambda_0 < \\dots < \\lambda_m = 1`.

Level ``i`` holds :math:`[u^-(\\lambda_i), u^+(\\lambda_i)]`. Between grid levels the
endpoint functions are understood as linear, which keeps them monotone, so every
formula below is exact on the grid nodes.
"""

import logging
import re
from typing import Dict, Set

import numpy as np

from fuzzjack.interval.interval import (
    Interval,
    hausdorff_endpoints,
    gh_diff_endpoints,
    add_endpoints,
    scale_endpoints,
)
from fuzzjack.utils.configs import TOL_NESTED, TOL_MONO, TOL_INCL
from fuzzjack.utils.errors import (
    GridMismatch,
    GHDifferenceUndefined,
    InvalidParams,
    NonNestedCuts,
)

logger = logging.getLogger(__name__)


class AlphaGrid:
    """
    Ordered levels :math:`\\lambda_0 = 0 < \\lambda_1 < \\dots < \\lambda_m = 1`, ``m >= 1``.

    >>> AlphaGrid.uniform(4).levels
    array([0.  , 0.25, 0.5 , 0.75, 1.  ])
    """

    def __init__(self, levels):
        levels = np.array(levels, dtype=float)
        if levels.ndim != 1 or len(levels) < 2:
            raise InvalidParams(f"an alpha grid needs at least 2 levels, got {levels.tolist()}")
        if levels[0] != 0 or levels[-1] != 1:
            raise InvalidParams(f"an alpha grid should start at 0 and end at 1, got {levels[0]} and {levels[-1]}")
        if not np.all(np.diff(levels) > 0):
            raise InvalidParams("alpha grid levels should be strictly increasing")
        levels.setflags(write=False)
        self._levels = levels

    @classmethod
    def uniform(cls, m: int = 100) -> "AlphaGrid":
        if m < 1:
            raise InvalidParams(f"m should be at least 1, got {m}")
        return cls(np.linspace(0.0, 1.0, m + 1))

    @classmethod
    def from_levels(cls, levels) -> "AlphaGrid":
        """
        >>> AlphaGrid.from_levels([0, 0.5, 1]).m
        2
        """
        return cls(levels)

    @property
    def levels(self) -> np.ndarray:
        return self._levels

    @property
    def m(self) -> int:
        return len(self._levels) - 1

    def index(self, alpha: float, tol: float = 1e-12) -> int:
        """Position of the grid level ``alpha``. Levels off the grid are rejected."""
        idx = int(np.argmin(np.abs(self._levels - alpha)))
        if abs(self._levels[idx] - alpha) > tol:
            raise InvalidParams(f"{alpha} is not a level of the grid")
        return idx

    def to_list(self):
        return self._levels.tolist()

    def __len__(self):
        return len(self._levels)

    def __eq__(self, other):
        if not isinstance(other, AlphaGrid):
            return NotImplemented
        return self is other or np.array_equal(self._levels, other.levels)

    def __hash__(self):
        return hash(self._levels.tobytes())

    def __repr__(self):
        if np.allclose(np.diff(self._levels), 1 / self.m):
            return f"AlphaGrid.uniform({self.m})"
        return f"AlphaGrid({self.to_list()})"


def _check_cuts(lo: np.ndarray, hi: np.ndarray, tol: float):
    bad = np.nonzero(lo > hi + tol)[0]
    if len(bad):
        i = bad[0]
        raise NonNestedCuts(f"lo > hi at level {i}: [{lo[i]}, {hi[i]}]")
    # u- nondecreasing and u+ nonincreasing in the level
    bad = np.nonzero((np.diff(lo) < -tol) | (np.diff(hi) > tol))[0]
    if len(bad):
        i = bad[0]
        raise NonNestedCuts(
            f"cuts at levels {i} and {i + 1} are not nested: "
            f"[{lo[i]}, {hi[i]}] does not contain [{lo[i + 1]}, {hi[i + 1]}]"
        )


class FuzzyNumber:
    """
    A fuzzy number as its cut family on an `AlphaGrid`.

    Args:
        grid (AlphaGrid): the levels.
        cuts (array-like): shape ``(m + 1, 2)``, row ``i`` is the cut at level ``i``.
        tol (float): slack of the nestedness check.
    """

    __slots__ = ("_grid", "_cuts")

    def __init__(self, grid: AlphaGrid, cuts, tol: float = TOL_NESTED):
        cuts = np.array(cuts, dtype=float)
        if cuts.shape != (len(grid), 2):
            raise InvalidParams(f"expected cuts of shape {(len(grid), 2)}, got {cuts.shape}")
        if not np.all(np.isfinite(cuts)):
            raise InvalidParams("cut endpoints should be finite")
        _check_cuts(cuts[:, 0], cuts[:, 1], tol)
        cuts.setflags(write=False)
        self._grid = grid
        self._cuts = cuts

    @classmethod
    def from_endpoints(cls, grid: AlphaGrid, lo, hi, tol: float = TOL_NESTED) -> "FuzzyNumber":
        return cls(grid, np.stack([lo, hi], axis=-1), tol=tol)

    @property
    def grid(self) -> AlphaGrid:
        return self._grid

    @property
    def cuts(self) -> np.ndarray:
        return self._cuts

    @property
    def lower(self) -> np.ndarray:
        return self._cuts[:, 0]

    @property
    def upper(self) -> np.ndarray:
        return self._cuts[:, 1]

    @property
    def widths(self) -> np.ndarray:
        return self.upper - self.lower

    def cut(self, i: int) -> Interval:
        return Interval(*self._cuts[i])

    def cut_at(self, alpha: float) -> Interval:
        return self.cut(self._grid.index(alpha))

    @property
    def core(self) -> Interval:
        return self.cut(-1)

    @property
    def support(self) -> Interval:
        return self.cut(0)

    def is_crisp(self, tol: float = 0.0) -> bool:
        return bool(np.ptp(self._cuts) <= tol)

    def allclose(self, other: "FuzzyNumber", atol: float = 1e-12) -> bool:
        _check_grid(self, other)
        return bool(np.allclose(self._cuts, other.cuts, rtol=0, atol=atol))

    def to_dict(self) -> Dict:
        return {"levels": self._grid.to_list(), "cuts": self._cuts.tolist()}

    @classmethod
    def from_dict(cls, d: Dict) -> "FuzzyNumber":
        return cls(AlphaGrid(d["levels"]), d["cuts"])

    def __add__(self, other):
        if not isinstance(other, FuzzyNumber):
            return NotImplemented
        return add(self, other)

    def __mul__(self, k):
        if isinstance(k, FuzzyNumber):
            return NotImplemented
        return scale(k, self)

    __rmul__ = __mul__

    def __neg__(self):
        return scale(-1, self)

    def __eq__(self, other):
        if not isinstance(other, FuzzyNumber):
            return NotImplemented
        return self._grid == other.grid and np.array_equal(self._cuts, other.cuts)

    def __hash__(self):
        return hash((self._grid, self._cuts.tobytes()))

    def __repr__(self):
        return f"FuzzyNumber(grid={self._grid!r}, support={self.support}, core={self.core})"


def _check_grid(u: FuzzyNumber, v: FuzzyNumber):
    if u.grid != v.grid:
        raise GridMismatch(f"fuzzy numbers live on different grids: {u.grid!r} and {v.grid!r}")


def from_trapezoidal(a, b, c, d, grid: AlphaGrid) -> FuzzyNumber:
    """
    Trapezoidal fuzzy number with support ``[a, d]`` and core ``[b, c]``.

    >>> u = from_trapezoidal(0, 1, 2, 3, AlphaGrid.uniform(2))
    >>> u.cuts.tolist()
    [[0.0, 3.0], [0.5, 2.5], [1.0, 2.0]]
    """
    if not a <= b <= c <= d:
        raise InvalidParams(f"trapezoidal parameters should be ordered, got {(a, b, c, d)}")
    lam = grid.levels
    lo = a + (b - a) * lam
    hi = d - (d - c) * lam
    return FuzzyNumber.from_endpoints(grid, lo, hi)


def from_triangular(a, b, c, grid: AlphaGrid) -> FuzzyNumber:
    """
    Triangular fuzzy number :math:`\\langle a, b, c \\rangle`.

    >>> from_triangular(5, 9, 11, AlphaGrid.uniform(2)).cut(1)
    Interval(7.0, 10.0)
    """
    if not a <= b <= c:
        raise InvalidParams(f"triangular parameters should be ordered, got {(a, b, c)}")
    return from_trapezoidal(a, b, b, c, grid)


def crisp(r, grid: AlphaGrid) -> FuzzyNumber:
    r = float(r)
    return FuzzyNumber.from_endpoints(grid, np.full(len(grid), r), np.full(len(grid), r))


def add(u: FuzzyNumber, v: FuzzyNumber) -> FuzzyNumber:
    _check_grid(u, v)
    lo, hi = add_endpoints(u.lower, u.upper, v.lower, v.upper)
    return FuzzyNumber.from_endpoints(u.grid, lo, hi)


def scale(k, u: FuzzyNumber) -> FuzzyNumber:
    lo, hi = scale_endpoints(float(k), u.lower, u.upper)
    return FuzzyNumber.from_endpoints(u.grid, lo, hi)


def d_infty(u: FuzzyNumber, v: FuzzyNumber) -> float:
    """
    Supremum metric: the largest Hausdorff distance between cuts of the same level.
    """
    _check_grid(u, v)
    return float(np.max(hausdorff_endpoints(u.lower, u.upper, v.lower, v.upper)))


def includes(u: FuzzyNumber, v: FuzzyNumber, tol: float = TOL_INCL) -> bool:
    """
    ``True`` if ``u`` includes ``v``, i.e. every cut of ``v`` lies in the cut of ``u``
    of the same level.
    """
    _check_grid(u, v)
    return bool(np.all(u.lower - tol <= v.lower) and np.all(v.upper <= u.upper + tol))


def fuzzy_inclusion(u: FuzzyNumber, v: FuzzyNumber, tol: float = TOL_INCL) -> bool:
    """:math:`u \\subseteq v`."""
    return includes(v, u, tol)


def gh_cases(u: FuzzyNumber, v: FuzzyNumber, tol: float = TOL_MONO) -> Set[int]:
    """
    The existence cases of :math:`u \\ominus_{gH} v` that hold on the grid:

    1. ``len(u) >= len(v)`` at all levels, :math:`u^- - v^-` nondecreasing and
       :math:`u^+ - v^+` nonincreasing in the level;
    2. ``len(u) <= len(v)`` at all levels, :math:`u^+ - v^+` nondecreasing and
       :math:`u^- - v^-` nonincreasing.

    Both cases hold exactly when the difference is crisp.
    """
    _check_grid(u, v)
    dlo = np.diff(u.lower - v.lower)
    dhi = np.diff(u.upper - v.upper)
    wu = u.widths
    wv = v.widths
    cases = set()
    if np.all(wu >= wv - tol) and np.all(dlo >= -tol) and np.all(dhi <= tol):
        cases.add(1)
    if np.all(wu <= wv + tol) and np.all(dhi >= -tol) and np.all(dlo <= tol):
        cases.add(2)
    return cases


def gh_exists(u: FuzzyNumber, v: FuzzyNumber, tol: float = TOL_MONO) -> bool:
    return bool(gh_cases(u, v, tol))


def gh_difference(u: FuzzyNumber, v: FuzzyNumber, tol: float = TOL_MONO) -> FuzzyNumber:
    """
    Generalized Hukuhara difference, computed level-wise on the cuts.

    Raises:
        GHDifferenceUndefined: the level-wise differences do not form a fuzzy number.
    """
    if not gh_exists(u, v, tol):
        raise GHDifferenceUndefined(
            f"gH-difference of {u!r} and {v!r} is not a fuzzy number"
        )
    lo, hi = gh_diff_endpoints(u.lower, u.upper, v.lower, v.upper)
    # the existence test accepts violations up to tol
    return FuzzyNumber.from_endpoints(u.grid, lo, hi, tol=max(tol, TOL_NESTED))


def g_difference(u: FuzzyNumber, v: FuzzyNumber) -> FuzzyNumber:
    """
    Generalized difference. The cut at level :math:`\\alpha` is the hull of the
    level-wise gH-differences over all levels :math:`\\beta \\geq \\alpha`, which on
    the grid is a suffix minimum / maximum of the endpoint differences.
    """
    _check_grid(u, v)
    lo, hi = gh_diff_endpoints(u.lower, u.upper, v.lower, v.upper)
    lo = np.minimum.accumulate(lo[::-1])[::-1]
    hi = np.maximum.accumulate(hi[::-1])[::-1]
    return FuzzyNumber.from_endpoints(u.grid, lo, hi)


_literal_re = re.compile(r"^\s*<?\s*([^<>]*?)\s*>?\s*$")


def parse_fuzzy_literal(text: str, grid: AlphaGrid) -> FuzzyNumber:
    """
    Parse ``<a,b,c>`` (triangular), ``<a,b,c,d>`` (trapezoidal) or a single number (crisp).

    >>> parse_fuzzy_literal("<12,15,19>", AlphaGrid.uniform(1)).cuts.tolist()
    [[12.0, 19.0], [15.0, 15.0]]
    """
    body = _literal_re.match(text).group(1)
    try:
        values = [float(s) for s in body.split(",")]
    except ValueError:
        raise InvalidParams(f"can't parse fuzzy number literal {text!r}")
    if len(values) == 1:
        return crisp(values[0], grid)
    elif len(values) == 3:
        return from_triangular(*values, grid)
    elif len(values) == 4:
        return from_trapezoidal(*values, grid)
    raise InvalidParams(f"a fuzzy number literal has 1, 3 or 4 entries, got {text!r}")

# -*- coding: utf-8 -*-

"""
Compact real intervals :math:`[lo, hi]` and the interval operations used
level-wise by the fuzzy arithmetic.

The ``*_endpoints`` kernels work on numpy arrays of endpoints and are what
`fuzzjack.fuzzy.number` calls on whole cut families. The functions taking
`Interval` objects are thin wrappers around them.
"""

import logging
from typing import Tuple

import numpy as np

from fuzzjack.utils.errors import InvalidParams

logger = logging.getLogger(__name__)


class Interval:
    """
    A compact interval :math:`[lo, hi]` with ``lo <= hi``. Degenerate intervals
    (``lo == hi``) stand for crisp values.

    >>> Interval(5, 11) + Interval(1, 2)
    Interval(6.0, 13.0)
    >>> -1 * Interval(1, 3)
    Interval(-3.0, -1.0)
    """

    __slots__ = ("_lo", "_hi")

    def __init__(self, lo, hi):
        lo = float(lo)
        hi = float(hi)
        if not lo <= hi:
            raise InvalidParams(f"interval requires lo <= hi, got [{lo}, {hi}]")
        self._lo = lo
        self._hi = hi

    @classmethod
    def from_pair(cls, pair) -> "Interval":
        lo, hi = pair
        return cls(lo, hi)

    @classmethod
    def point(cls, r) -> "Interval":
        return cls(r, r)

    @property
    def lo(self) -> float:
        return self._lo

    @property
    def hi(self) -> float:
        return self._hi

    @property
    def length(self) -> float:
        return self._hi - self._lo

    @property
    def is_degenerate(self) -> bool:
        return self._lo == self._hi

    def contains(self, other: "Interval", tol: float = 0.0) -> bool:
        """Whether ``other`` is a subset of this interval, up to ``tol``."""
        return self._lo - tol <= other.lo and other.hi <= self._hi + tol

    def to_list(self):
        return [self._lo, self._hi]

    def __add__(self, other):
        if not isinstance(other, Interval):
            return NotImplemented
        return minkowski_add(self, other)

    def __mul__(self, k):
        if isinstance(k, Interval):
            return NotImplemented
        return scale_interval(k, self)

    __rmul__ = __mul__

    def __neg__(self):
        return scale_interval(-1, self)

    def __eq__(self, other):
        if not isinstance(other, Interval):
            return NotImplemented
        return self._lo == other.lo and self._hi == other.hi

    def __hash__(self):
        return hash((self._lo, self._hi))

    def __iter__(self):
        yield self._lo
        yield self._hi

    def __repr__(self):
        return f"Interval({self._lo!r}, {self._hi!r})"

    def __str__(self):
        return f"[{self._lo:g}, {self._hi:g}]"


# endpoint kernels. All arguments broadcast against each other.

def hausdorff_endpoints(alo, ahi, blo, bhi):
    return np.maximum(np.abs(np.subtract(alo, blo)), np.abs(np.subtract(ahi, bhi)))


def gh_diff_endpoints(alo, ahi, blo, bhi) -> Tuple[np.ndarray, np.ndarray]:
    dlo = np.subtract(alo, blo)
    dhi = np.subtract(ahi, bhi)
    return np.minimum(dlo, dhi), np.maximum(dlo, dhi)


def add_endpoints(alo, ahi, blo, bhi) -> Tuple[np.ndarray, np.ndarray]:
    return np.add(alo, blo), np.add(ahi, bhi)


def scale_endpoints(k, lo, hi) -> Tuple[np.ndarray, np.ndarray]:
    klo = np.multiply(k, lo)
    khi = np.multiply(k, hi)
    # a negative factor swaps the ends
    return np.minimum(klo, khi), np.maximum(klo, khi)


def length(a: Interval) -> float:
    """
    >>> length(Interval(12, 19))
    7.0
    """
    return a.length


def hausdorff(a: Interval, b: Interval) -> float:
    """
    Hausdorff distance of two compact intervals.

    >>> hausdorff(Interval(12, 19), Interval(5, 11))
    8.0
    """
    return float(hausdorff_endpoints(a.lo, a.hi, b.lo, b.hi))


def gh_diff_interval(a: Interval, b: Interval) -> Interval:
    """
    Generalized Hukuhara difference :math:`A \\ominus_{gH} B`, which always exists
    for intervals.

    >>> gh_diff_interval(Interval(12, 19), Interval(5, 11))
    Interval(7.0, 8.0)
    >>> gh_diff_interval(Interval(0, 1), Interval(0, 2))
    Interval(-1.0, 0.0)
    """
    lo, hi = gh_diff_endpoints(a.lo, a.hi, b.lo, b.hi)
    return Interval(lo, hi)


def gh_case_interval(a: Interval, b: Interval) -> int:
    """
    Which defining identity of :math:`w = A \\ominus_{gH} B` holds:
    1 for :math:`A = B + w` (``len(A) >= len(B)``), 2 for :math:`B = A + (-1)w`.
    """
    return 1 if a.length >= b.length else 2


def minkowski_add(a: Interval, b: Interval) -> Interval:
    lo, hi = add_endpoints(a.lo, a.hi, b.lo, b.hi)
    return Interval(lo, hi)


def scale_interval(k, a: Interval) -> Interval:
    lo, hi = scale_endpoints(float(k), a.lo, a.hi)
    return Interval(lo, hi)

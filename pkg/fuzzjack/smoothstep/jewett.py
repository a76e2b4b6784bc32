# -*- coding: utf-8 -*-

r"""
Polynomial steps :math:`p(x) = (1 - x^m)^N` that stay above :math:`1 - \varepsilon` on
:math:`[0, a]` and below :math:`\varepsilon` on :math:`[b, 1]`.

Small :math:`\varepsilon` or narrow :math:`[a, b]` need exponents ``N`` far beyond the range
of a double, so everything is done with

.. math::
    h(x) = \log(-\log(1 - x^m)), \qquad p(x) = \exp(-\exp(\log N + h(x)))

and ``N`` is kept as a python int.
"""

import logging
import math
from typing import Optional

import numpy as np

from fuzzjack.utils.errors import InvalidParams, SearchExhausted

logger = logging.getLogger(__name__)

# below this m*log(x), -log(1 - x^m) equals x^m to double precision
_SMALL_POWER = -30.0
# required gap, in log space, between log N and the admissible bounds
_LOG_MARGIN = 1e-9
_LN2 = math.log(2)


def _h(x: float, m: int) -> float:
    if x <= 0:
        return -math.inf
    if x >= 1:
        return math.inf
    t = m * math.log(x)
    if t < _SMALL_POWER:
        return t
    if t > -_LN2:
        return math.log(-math.log(-math.expm1(t)))
    return math.log(-math.log1p(-math.exp(t)))


def _smallest_int_above(log_bound: float) -> int:
    """Smallest positive integer ``N`` with ``log N > log_bound``."""
    if log_bound < 0:
        return 1
    if log_bound < 52 * _LN2:
        return math.floor(math.exp(log_bound)) + 1
    # N = mantissa * 2**e with a 53 bit mantissa
    e = math.floor(log_bound / _LN2) - 52
    mantissa = math.exp(log_bound - e * _LN2)
    return (math.floor(mantissa) + 1) << e


class JewettPoly:
    r"""
    :math:`p(x) = (1 - x^m)^{N}`, nonincreasing on [0, 1] with :math:`p(0) = 1`, :math:`p(1) = 0`.
    Callable on floats and numpy arrays.

    >>> p = JewettPoly(2, 3)
    >>> round(float(p(0.5)), 12)
    0.421875
    """

    __slots__ = ("m", "n_exp", "log_n")

    def __init__(self, m: int, n_exp: int):
        if m < 1 or n_exp < 1:
            raise InvalidParams(f"exponents should be positive, got m={m}, n={n_exp}")
        self.m = int(m)
        self.n_exp = int(n_exp)
        self.log_n = math.log(self.n_exp)

    def log_minus_log(self, x) -> np.ndarray:
        """:math:`\\log N + h(x)`, ``-inf`` at 0 and ``inf`` at 1."""
        x = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore", over="ignore", under="ignore", invalid="ignore"):
            t = self.m * np.log(x)
            # log(1 - e^t) without cancellation on either side of -log 2
            log1m = np.where(t > -_LN2, np.log(-np.expm1(t)), np.log1p(-np.exp(t)))
            h = np.where(t < _SMALL_POWER, t, np.log(-log1m))
        return self.log_n + h

    def __call__(self, x):
        with np.errstate(over="ignore", under="ignore"):
            return np.exp(-np.exp(self.log_minus_log(x)))

    def to_list(self):
        return [self.m, self.n_exp]

    def __eq__(self, other):
        if not isinstance(other, JewettPoly):
            return NotImplemented
        return self.m == other.m and self.n_exp == other.n_exp

    def __hash__(self):
        return hash((self.m, self.n_exp))

    def __repr__(self):
        if self.n_exp.bit_length() > 64:
            return f"JewettPoly(m={self.m}, n_exp~2**{self.n_exp.bit_length() - 1})"
        return f"JewettPoly(m={self.m}, n_exp={self.n_exp})"


def admissible_exponent(a: float, b: float, eps: float, m: int) -> Optional[int]:
    """
    Smallest ``N`` meeting both conditions for this ``m``, ``None`` if there is none.

    >>> admissible_exponent(0.4, 0.6, 0.1, 1) is None
    True
    """
    log_upper = math.log(-math.log1p(-eps)) - _h(a, m)
    log_lower = math.log(-math.log(eps)) - _h(b, m)
    if log_upper - log_lower <= 2 * _LOG_MARGIN:
        return None
    n_exp = _smallest_int_above(log_lower + _LOG_MARGIN)
    if math.log(n_exp) < log_upper - _LOG_MARGIN:
        return n_exp
    return None


def jewett_poly(a: float, b: float, eps: float, max_m: int = 10 ** 7) -> JewettPoly:
    r"""
    Find the smallest ``m`` and then the smallest ``N`` with
    :math:`p(a) > 1 - \varepsilon` and :math:`p(b) < \varepsilon`.

    In log space the two conditions read :math:`\log(-\log(1-\varepsilon)) - h(a) > \log N > \log(-\log\varepsilon) - h(b)`.

    >>> p = jewett_poly(0.4, 0.6, 0.1)
    >>> bool(p(0.4) > 0.9 and p(0.6) < 0.1)
    True

    Raises:
        InvalidParams: ``a``, ``b`` or ``eps`` out of range.
        SearchExhausted: no exponents up to ``m = max_m``.
    """
    if not 0 <= a < b <= 1:
        raise InvalidParams(f"jewett polynomial needs 0 <= a < b <= 1, got a={a}, b={b}")
    if not 0 < eps < 0.5:
        raise InvalidParams(f"eps should lie in (0, 1/2), got {eps}")
    for m in range(1, max_m + 1):
        n_exp = admissible_exponent(a, b, eps, m)
        if n_exp is not None:
            poly = JewettPoly(m, n_exp)
            logger.debug(f"jewett polynomial for a={a}, b={b}, eps={eps}: {poly}")
            return poly
    raise SearchExhausted(f"no jewett polynomial for a={a}, b={b}, eps={eps} with m <= {max_m}")

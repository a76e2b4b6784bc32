# -*- coding: utf-8 -*-

"""
Approximants of the form :math:`base + \\sum_j c_j(x) \\Delta_j` where the
coefficients :math:`c_j \\geq 0` come from a step family and the
:math:`\\Delta_j` are fuzzy numbers (or intervals), added level-wise.
"""

import logging
from typing import List, Sequence, Union

import numpy as np

from fuzzjack.fuzzy.function import FuzzyFunction, IntervalFunction
from fuzzjack.fuzzy.number import FuzzyNumber
from fuzzjack.interval.interval import Interval, add_endpoints, scale_endpoints
from fuzzjack.smoothstep.family import PhiFamily, PsiFamily
from fuzzjack.utils.configs import Method, TOL_MONO

logger = logging.getLogger(__name__)

Family = Union[PsiFamily, PhiFamily]


def _combine(base_lo, base_hi, coefficients: np.ndarray, deltas_lo, deltas_hi):
    # coefficients: (nx, nterms); base and deltas broadcast against (nx, ...)
    lo = np.broadcast_to(base_lo, (coefficients.shape[0],) + np.shape(base_lo)).copy()
    hi = np.broadcast_to(base_hi, lo.shape).copy()
    extra = (slice(None),) + (None,) * (lo.ndim - 1)
    for j in range(coefficients.shape[1]):
        tlo, thi = scale_endpoints(coefficients[:, j][extra], deltas_lo[j], deltas_hi[j])
        lo, hi = add_endpoints(lo, hi, tlo, thi)
    return lo, hi


class Approximant(FuzzyFunction):
    r"""
    A fuzzy approximant :math:`x \mapsto base + \sum_j c_j(x) \cdot \Delta_j`.

    Args:
        base (FuzzyNumber): :math:`u_n` (``gh_dec``, ``g_diff``), :math:`u_0` (``gh_inc``)
            or crisp 0 (``trapezoid``).
        family: the step family the coefficients are read from.
        members (sequence of int): which members of ``family`` multiply ``deltas``.
        deltas (list of FuzzyNumber): the term numbers.
        method (Method): the construction.
        n (int): number of subintervals.
        delta (float): half-width of the transition bands.
        eps (float): target slack, ``None`` for ``trapezoid``.
        eps_prime (float): tolerance of the steps, ``None`` for ``trapezoid``.
    """

    kind = "approximant"
    # rounding in the running sums may break nestedness by a few ulps
    value_tol = TOL_MONO

    def __init__(self, base: FuzzyNumber, family: Family, members: Sequence[int],
                 deltas: List[FuzzyNumber], method: Method, n: int, delta: float,
                 eps: float = None, eps_prime: float = None, name: str = None):
        assert len(members) == len(deltas)
        super().__init__(base.grid, name=name or f"{method.value}(n={n})")
        self.base = base
        self.family = family
        self.members = list(members)
        self.deltas = deltas
        self.method = method
        self.n = n
        self.delta = delta
        self.eps = eps
        self.eps_prime = eps_prime
        self._deltas_lo = np.stack([d.lower for d in deltas])
        self._deltas_hi = np.stack([d.upper for d in deltas])

    @property
    def nodes(self) -> np.ndarray:
        return np.arange(self.n + 1) / self.n

    @property
    def terms(self):
        """``(coefficient, delta)`` pairs, the coefficient as a function of ``x``."""
        return [(lambda x, k=k: self.coefficients(x)[:, k], d) for k, d in enumerate(self.deltas)]

    def coefficients(self, xs) -> np.ndarray:
        return self.family.evaluate(xs)[:, self.members]

    def _evaluate(self, xs):
        lo, hi = _combine(self.base.lower, self.base.upper, self.coefficients(xs),
                          self._deltas_lo[:, None, :], self._deltas_hi[:, None, :])
        return np.stack([lo, hi], axis=-1)

    def __str__(self):
        return f"{self.method.value} approximant n={self.n} delta={self.delta:g}"


def eval_approximant(approximant: Approximant, x: float) -> FuzzyNumber:
    return approximant.eval(x)


class IntervalApproximant(IntervalFunction):
    """
    Interval counterpart of `Approximant`, :math:`A + \\sum_j c_j(x) D_j`.
    """

    def __init__(self, base: Interval, family: PsiFamily, members: Sequence[int],
                 deltas: List[Interval], method_direction: str, n: int, delta: float,
                 eps: float, eps_prime: float):
        assert len(members) == len(deltas)
        self.base = base
        self.family = family
        self.members = list(members)
        self.deltas = deltas
        self.method = Method.interval_gh
        self.direction = method_direction
        self.n = n
        self.delta = delta
        self.eps = eps
        self.eps_prime = eps_prime
        deltas_lo = np.array([d.lo for d in deltas])
        deltas_hi = np.array([d.hi for d in deltas])

        def evaluator(xs):
            coefficients = self.family.evaluate(xs)[:, self.members]
            return _combine(base.lo, base.hi, coefficients, deltas_lo, deltas_hi)

        super().__init__(evaluator, name=f"interval_gh_{method_direction}(n={n})")

    @property
    def nodes(self) -> np.ndarray:
        return np.arange(self.n + 1) / self.n

    def eval(self, x: float) -> Interval:
        lo, hi = self.evaluate(x)
        # same rounding slack as the fuzzy case
        if hi[0] < lo[0] and lo[0] - hi[0] <= TOL_MONO:
            hi = lo
        return Interval(lo[0], hi[0])

# -*- coding: utf-8 -*-

"""
Builders of the Jackson type approximants.

All builders sample the target at the nodes :math:`a_j = j / n` only. The Jewett based
ones (``gh_dec``, ``gh_inc``, ``g_diff`` and the interval construction) need step
functions with tolerance :math:`\\varepsilon' = \\varepsilon / (2 (n + 1) M)` where
:math:`2M` bounds the diameter of the range of the target.
"""

import logging
from typing import Optional, Tuple

import numpy as np
from scipy.spatial.distance import pdist

from fuzzjack.approx.approximant import Approximant, IntervalApproximant
from fuzzjack.fuzzy.function import (
    FuzzyFunction,
    IntervalFunction,
    check_length_monotone,
    check_nested_decreasing,
    check_nested_increasing,
    gh_chain_breaks,
)
from fuzzjack.fuzzy.number import crisp, g_difference, gh_difference
from fuzzjack.interval.interval import gh_diff_interval
from fuzzjack.smoothstep.family import PsiFamily, phi_family, psi_family
from fuzzjack.utils.configs import ApproxConfig, Method
from fuzzjack.utils.errors import GHDifferenceUndefined, HypothesisViolated, InvalidParams
from fuzzjack.utils.utils import unit_points

logger = logging.getLogger(__name__)

NESTING_FAILED = "nesting hypothesis failed"
LENGTH_FAILED = "length hypothesis failed"


def default_delta(n: int) -> float:
    """Middle of the admissible range :math:`(0, 1/(2n))`."""
    return 1 / (4 * n)


def _check_params(n: int, eps: Optional[float], delta: Optional[float]) -> Tuple[int, float]:
    if int(n) != n or n < 1:
        raise InvalidParams(f"n should be a positive integer, got {n}")
    if eps is not None and not 0 < eps < 0.5:
        raise InvalidParams(f"eps should lie in (0, 1/2), got {eps}")
    if delta is None:
        delta = default_delta(n)
    if not 0 < delta < 1 / (2 * n):
        raise InvalidParams(f"delta should lie in (0, 1/(2n)) = (0, {1 / (2 * n)}), got {delta}")
    return int(n), delta


def epsilon_prime(diameter_bound: float, n: int, eps: float) -> float:
    """
    Tolerance of the steps. ``M`` is :math:`\\max(1, diameter / 2)`, doubled.

    >>> epsilon_prime(0.0, 1, 0.1)
    0.0125
    """
    big_m = 2 * max(1.0, diameter_bound / 2)
    return eps / (2 * (n + 1) * big_m)


def fuzzy_diameter(f: FuzzyFunction, probes: int = 65) -> float:
    """Largest :math:`d_\\infty` distance between values of ``f`` at ``probes`` uniform points."""
    cuts = f.evaluate(unit_points(probes))
    return float(pdist(cuts.reshape(probes, -1), "chebyshev").max())


def interval_diameter(f_alpha: IntervalFunction, probes: int = 65) -> float:
    lo, hi = f_alpha.evaluate(unit_points(probes))
    return float(pdist(np.stack([lo, hi], axis=-1), "chebyshev").max())


def _steps(n, delta, eps, diameter, config: ApproxConfig, psi: Optional[PsiFamily]):
    eps_p = epsilon_prime(diameter, n, eps)
    if psi is None:
        psi = psi_family(n, delta, eps_p, max_m=config.jewett_max_m)
    elif psi.n != n:
        raise InvalidParams(f"step family built for n={psi.n}, expected n={n}")
    logger.info(f"n={n}, delta={delta:g}, eps={eps:g}, eps'={psi.eps:g}, diameter bound={diameter:g}")
    return psi


def _node_values(f: FuzzyFunction, n: int):
    return f.values(np.arange(n + 1) / n)


def _check_chain(f: FuzzyFunction, n: int, direction: str, config: ApproxConfig):
    breaks = gh_chain_breaks(f, n, direction, config.tol_mono)
    if breaks:
        raise GHDifferenceUndefined(
            f"gH-difference chain of {f.name} broken between nodes {breaks[0]} and {breaks[0] + 1}"
        )


def build_gh_dec(f: FuzzyFunction, n: int, eps: float, delta: float = None,
                 config: ApproxConfig = None, psi: PsiFamily = None) -> Approximant:
    r"""
    :math:`g(x) = u_n + \sum_{j<n} \psi_j(x) (u_j \ominus_{gH} u_{j+1})` for ``f`` with downward
    nested values. :math:`D(f, g) \leq 2\omega(f, 1/n) + \varepsilon`.

    Args:
        f (FuzzyFunction): the target.
        n (int): number of subintervals.
        eps (float): target slack in :math:`(0, 1/2)`.
        delta (float): transition half-width, default :math:`1/(4n)`.
        config (ApproxConfig): tolerances and probe counts.
        psi (PsiFamily): use these steps instead of building them.

    Raises:
        InvalidParams, HypothesisViolated, GHDifferenceUndefined
    """
    config = config or ApproxConfig()
    n, delta = _check_params(n, eps, delta)
    if not check_nested_decreasing(f, config.probes, config.tol_incl):
        raise HypothesisViolated(NESTING_FAILED)
    _check_chain(f, n, "forward", config)
    u = _node_values(f, n)
    deltas = [gh_difference(u[j], u[j + 1], config.tol_mono) for j in range(n)]
    psi = _steps(n, delta, eps, fuzzy_diameter(f, config.diameter_probes), config, psi)
    return Approximant(u[n], psi, range(n), deltas, Method.gh_dec, n, delta, eps, psi.eps)


def build_gh_inc(f: FuzzyFunction, n: int, eps: float, delta: float = None,
                 config: ApproxConfig = None, psi: PsiFamily = None) -> Approximant:
    r"""
    :math:`g(x) = u_0 + \sum_{j<n} (1 - \psi_j(x)) (u_{j+1} \ominus_{gH} u_j)` for ``f`` with
    upward nested values. Same bound as `build_gh_dec`.
    """
    config = config or ApproxConfig()
    n, delta = _check_params(n, eps, delta)
    if not check_nested_increasing(f, config.probes, config.tol_incl):
        raise HypothesisViolated(NESTING_FAILED)
    _check_chain(f, n, "backward", config)
    u = _node_values(f, n)
    deltas = [gh_difference(u[j + 1], u[j], config.tol_mono) for j in range(n)]
    psi = _steps(n, delta, eps, fuzzy_diameter(f, config.diameter_probes), config, psi)
    return Approximant(u[0], psi.complement(), range(n), deltas, Method.gh_inc, n, delta, eps, psi.eps)


def build_g(f: FuzzyFunction, n: int, eps: float, delta: float = None,
            config: ApproxConfig = None, psi: PsiFamily = None) -> Approximant:
    r"""
    :math:`h(x) = u_n + \sum_{j<n} \psi_j(x) (u_j \ominus_g u_{j+1})`. The g-difference always
    exists, only downward nesting is required; :math:`D(f, h) \leq (2n + 2)\omega(f, 1/n) + \varepsilon`.
    """
    config = config or ApproxConfig()
    n, delta = _check_params(n, eps, delta)
    if not check_nested_decreasing(f, config.probes, config.tol_incl):
        raise HypothesisViolated(NESTING_FAILED)
    u = _node_values(f, n)
    deltas = [g_difference(u[j], u[j + 1]) for j in range(n)]
    psi = _steps(n, delta, eps, fuzzy_diameter(f, config.diameter_probes), config, psi)
    return Approximant(u[n], psi, range(n), deltas, Method.g_diff, n, delta, eps, psi.eps)


def build_trapezoid(f: FuzzyFunction, n: int, delta: float = None) -> Approximant:
    r"""
    :math:`T(x) = \sum_k \varphi_k(x) f(a_k)` with the trapezoidal partition of unity.
    No hypothesis on ``f``; :math:`D(f, T) \leq 3\omega(f, 1/n)`.
    """
    n, delta = _check_params(n, None, delta)
    u = _node_values(f, n)
    phi = phi_family(n, delta)
    logger.info(f"n={n}, delta={delta:g}")
    return Approximant(crisp(0, f.grid), phi, range(n + 1), u, Method.trapezoid, n, delta)


def build_interval_gh_dec(f_alpha: IntervalFunction, n: int, eps: float, delta: float = None,
                          config: ApproxConfig = None, psi: PsiFamily = None) -> IntervalApproximant:
    r"""
    :math:`g(x) = A_n + \sum_{j<n} \psi_j(x) (A_j \ominus A_{j+1})` for an interval function
    whose length does not increase. :math:`d_H(g(x), f(x)) \leq 2\omega(f, 1/n) + \varepsilon`.
    """
    config = config or ApproxConfig()
    n, delta = _check_params(n, eps, delta)
    if not check_length_monotone(f_alpha, "decreasing", config.probes, config.tol_incl):
        raise HypothesisViolated(LENGTH_FAILED)
    a = [f_alpha.eval(x) for x in np.arange(n + 1) / n]
    deltas = [gh_diff_interval(a[j], a[j + 1]) for j in range(n)]
    psi = _steps(n, delta, eps, interval_diameter(f_alpha, config.diameter_probes), config, psi)
    return IntervalApproximant(a[n], psi, range(n), deltas, "dec", n, delta, eps, psi.eps)


def build_interval_gh_inc(f_alpha: IntervalFunction, n: int, eps: float, delta: float = None,
                          config: ApproxConfig = None, psi: PsiFamily = None) -> IntervalApproximant:
    r"""
    :math:`g(x) = A_0 + \sum_{j<n} (1 - \psi_j(x)) (A_{j+1} \ominus A_j)` for an interval function
    whose length does not decrease.
    """
    config = config or ApproxConfig()
    n, delta = _check_params(n, eps, delta)
    if not check_length_monotone(f_alpha, "increasing", config.probes, config.tol_incl):
        raise HypothesisViolated(LENGTH_FAILED)
    a = [f_alpha.eval(x) for x in np.arange(n + 1) / n]
    deltas = [gh_diff_interval(a[j + 1], a[j]) for j in range(n)]
    psi = _steps(n, delta, eps, interval_diameter(f_alpha, config.diameter_probes), config, psi)
    return IntervalApproximant(a[0], psi.complement(), range(n), deltas, "inc", n, delta, eps, psi.eps)


def build_interval(f_alpha: IntervalFunction, n: int, eps: float, delta: float = None,
                   config: ApproxConfig = None) -> IntervalApproximant:
    """
    Pick the decreasing or the increasing construction from the length of ``f_alpha``.
    Constant length uses the decreasing one.
    """
    config = config or ApproxConfig()
    if check_length_monotone(f_alpha, "decreasing", config.probes, config.tol_incl):
        return build_interval_gh_dec(f_alpha, n, eps, delta, config)
    if check_length_monotone(f_alpha, "increasing", config.probes, config.tol_incl):
        return build_interval_gh_inc(f_alpha, n, eps, delta, config)
    raise HypothesisViolated(LENGTH_FAILED)

# -*- coding: utf-8 -*-

"""
Named fuzzy and interval valued functions with closed form moduli of continuity.

The scaled entries are :math:`f(x) = g(x) \\cdot u` for a positive continuous ``g``.
Their modulus is :math:`K \\omega(g, \\delta)` where :math:`K` is the largest absolute
endpoint of the support of ``u``. A decreasing ``g`` applied to a number with
``0`` in its core nests downward and always has gH-differences between its values.
"""

import logging
from typing import Callable, Dict

import numpy as np

from fuzzjack.fuzzy.function import FuzzyFunction, IntervalFunction
from fuzzjack.fuzzy.number import AlphaGrid, FuzzyNumber, crisp, from_triangular, parse_fuzzy_literal
from fuzzjack.utils.errors import InvalidParams, UnknownCatalogEntry

logger = logging.getLogger(__name__)


def _max_abs(cuts: np.ndarray) -> np.ndarray:
    # largest absolute endpoint per level
    return np.max(np.abs(cuts), axis=-1)


class ScaledFuzzyFunction(FuzzyFunction):
    r"""
    :math:`f(x) = g(x) \cdot u` with :math:`g > 0` on [0, 1].

    Args:
        g (callable): vectorized scalar function.
        g_modulus (callable): :math:`\delta \mapsto \omega(g, \delta)`.
        u (FuzzyNumber): the scaled number.
        g_lipschitz (float): Lipschitz constant of ``g`` if known.
    """

    kind = "catalog"

    def __init__(self, g: Callable, g_modulus: Callable[[float], float], u: FuzzyNumber,
                 name: str = "scaled", g_lipschitz: float = None):
        self.g = g
        self.g_modulus = g_modulus
        self.u = u
        self.level_factors = _max_abs(u.cuts)
        factor = float(self.level_factors[0])
        lipschitz = None if g_lipschitz is None else factor * g_lipschitz
        super().__init__(u.grid, name=name,
                         analytic_modulus=lambda delta: factor * g_modulus(delta),
                         lipschitz=lipschitz)

    def _evaluate(self, xs):
        gx = np.asarray(self.g(xs), dtype=float)
        if np.any(gx <= 0):
            raise InvalidParams(f"the factor of {self.name} should be positive on [0, 1]")
        return gx[:, None, None] * self.u.cuts[None]

    def _slice_modulus(self, idx):
        factor = float(self.level_factors[idx])
        return lambda delta: factor * self.g_modulus(delta)


class TranslatedFuzzyFunction(FuzzyFunction):
    r"""
    :math:`f(x) = u + s(x)`, a fuzzy number moved along a crisp path. All values share
    the widths of ``u``, so gH-differences always exist and are crisp.
    """

    kind = "catalog"

    def __init__(self, s: Callable, s_modulus: Callable[[float], float], u: FuzzyNumber,
                 name: str = "translated", s_lipschitz: float = None):
        self.s = s
        self.s_modulus = s_modulus
        self.u = u
        super().__init__(u.grid, name=name, analytic_modulus=s_modulus, lipschitz=s_lipschitz)

    def _evaluate(self, xs):
        sx = np.asarray(self.s(xs), dtype=float)
        return self.u.cuts[None] + sx[:, None, None]

    def _slice_modulus(self, idx):
        return self.s_modulus


def scaled(g: Callable, g_modulus: Callable[[float], float], u: FuzzyNumber,
           name: str = "scaled", g_lipschitz: float = None) -> ScaledFuzzyFunction:
    return ScaledFuzzyFunction(g, g_modulus, u, name=name, g_lipschitz=g_lipschitz)


def translated(s: Callable, s_modulus: Callable[[float], float], u: FuzzyNumber,
               name: str = "translated", s_lipschitz: float = None) -> TranslatedFuzzyFunction:
    return TranslatedFuzzyFunction(s, s_modulus, u, name=name, s_lipschitz=s_lipschitz)


# moduli of continuity on [0, 1]

def omega_exp(delta: float) -> float:
    """:math:`\\omega(e^{-x}, \\delta)`"""
    return 1 - np.exp(-min(delta, 1.0))


def omega_linear(delta: float) -> float:
    return min(delta, 1.0)


def omega_bump(delta: float) -> float:
    """:math:`\\omega(x(1-x), \\delta)`, reached by the pairs (0, delta) and (1 - delta, 1)."""
    if delta >= 0.5:
        return 0.25
    return delta * (1 - delta)


def omega_square(delta: float) -> float:
    """:math:`\\omega(x^2, \\delta)`"""
    delta = min(delta, 1.0)
    return delta * (2 - delta)


def _as_fuzzy(value, grid: AlphaGrid) -> FuzzyNumber:
    if isinstance(value, FuzzyNumber):
        if value.grid != grid:
            raise InvalidParams("parameter u lives on another alpha grid")
        return value
    if isinstance(value, str):
        return parse_fuzzy_literal(value, grid)
    return parse_fuzzy_literal(",".join(str(v) for v in value), grid)


def _default_u(grid):
    return from_triangular(-1, 0, 1, grid)


def _scaled_exp(grid, u=None):
    u = _default_u(grid) if u is None else _as_fuzzy(u, grid)
    return scaled(lambda x: np.exp(-x), omega_exp, u, name="scaled_exp", g_lipschitz=1.0)


def _scaled_linear(grid, u=None):
    u = _default_u(grid) if u is None else _as_fuzzy(u, grid)
    return scaled(lambda x: 1 + x, omega_linear, u, name="scaled_linear", g_lipschitz=1.0)


def _bump_width(grid, u=None):
    u = _default_u(grid) if u is None else _as_fuzzy(u, grid)
    return scaled(lambda x: 1 + x * (1 - x), omega_bump, u, name="bump_width", g_lipschitz=1.0)


def _translated(grid, u=None, amplitude=1.0):
    u = _default_u(grid) if u is None else _as_fuzzy(u, grid)
    amplitude = float(amplitude)
    return translated(lambda x: amplitude * x ** 2, lambda d: abs(amplitude) * omega_square(d), u,
                      name="translated", s_lipschitz=2 * abs(amplitude))


def _crisp_ident(grid):
    return translated(lambda x: x, omega_linear, crisp(0, grid), name="crisp_ident", s_lipschitz=1.0)


def _constant(grid, u=None):
    u = _default_u(grid) if u is None else _as_fuzzy(u, grid)
    return translated(np.zeros_like, lambda d: 0.0, u, name="constant", s_lipschitz=0.0)


_catalog: Dict[str, Callable] = {
    "scaled_exp": _scaled_exp,
    "scaled_linear": _scaled_linear,
    "bump_width": _bump_width,
    "translated": _translated,
    "crisp_ident": _crisp_ident,
    "constant": _constant,
}


def catalog_names():
    return list(_catalog)


def catalog(name: str, grid: AlphaGrid = None, **params) -> FuzzyFunction:
    """
    Build a catalog function.

    Args:
        name (str): one of `catalog_names`.
        grid (AlphaGrid): levels of the values. Defaults to ``AlphaGrid.uniform(100)``.
        params: entry parameters. ``u`` is the shape, as a `FuzzyNumber`, a literal such
            as ``"<-1,0,1>"`` or a list of 1, 3 or 4 numbers, default :math:`\\langle -1, 0, 1 \\rangle`.
            ``translated`` also takes ``amplitude`` (the path is ``amplitude * x**2``).

    >>> f = catalog("scaled_exp", grid=AlphaGrid.uniform(2), u=[0, 1, 2])
    >>> f.eval(0).cuts.tolist()
    [[0.0, 2.0], [0.5, 1.5], [1.0, 1.0]]
    """
    try:
        builder = _catalog[name]
    except KeyError:
        raise UnknownCatalogEntry(f"unknown catalog function {name!r}, choose from {catalog_names()}")
    if grid is None:
        grid = AlphaGrid.uniform(100)
    try:
        f = builder(grid, **params)
    except TypeError as e:
        raise InvalidParams(f"bad parameters {params} for catalog function {name!r}: {e}") from e
    logger.debug(f"catalog function {name} with {params}")
    return f


def _const_interval(lo=0.0, hi=1.0):
    lo, hi = float(lo), float(hi)
    if lo > hi:
        raise InvalidParams(f"interval requires lo <= hi, got [{lo}, {hi}]")
    return IntervalFunction(lambda x: (np.full_like(x, lo), np.full_like(x, hi)),
                            name="constant", analytic_modulus=lambda d: 0.0, lipschitz=0.0)


_interval_catalog: Dict[str, Callable] = {
    "exp_upper": lambda: IntervalFunction(lambda x: (np.zeros_like(x), np.exp(-x)), name="exp_upper",
                                          analytic_modulus=omega_exp, lipschitz=1.0),
    "symmetric_linear": lambda: IntervalFunction(lambda x: (-x, x), name="symmetric_linear",
                                                 analytic_modulus=omega_linear, lipschitz=1.0),
    "shrinking": lambda: IntervalFunction(lambda x: (x, 2 - x), name="shrinking",
                                          analytic_modulus=omega_linear, lipschitz=1.0),
    "constant": _const_interval,
}


def interval_catalog_names():
    return list(_interval_catalog)


def interval_catalog(name: str, **params) -> IntervalFunction:
    """
    Interval-valued catalog: ``exp_upper`` :math:`[0, e^{-x}]`, ``symmetric_linear``
    :math:`[-x, x]`, ``shrinking`` :math:`[x, 2 - x]` and ``constant`` (params ``lo``, ``hi``).

    >>> interval_catalog("shrinking").eval(0.25)
    Interval(0.25, 1.75)
    """
    try:
        builder = _interval_catalog[name]
    except KeyError:
        raise UnknownCatalogEntry(
            f"unknown interval catalog function {name!r}, choose from {interval_catalog_names()}"
        )
    return builder(**params)

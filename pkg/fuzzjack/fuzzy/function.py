# -*- coding: utf-8 -*-

"""
Fuzzy-number-valued functions on [0, 1], their level slices and moduli of
continuity, and probe based checks of the hypotheses the approximation
theorems put on them.
"""

import logging
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from fuzzjack.fuzzy.number import AlphaGrid, FuzzyNumber, gh_exists, d_infty
from fuzzjack.interval.interval import Interval, hausdorff_endpoints
from fuzzjack.utils.configs import ModulusKind, TOL_INCL, TOL_MONO, TOL_NESTED
from fuzzjack.utils.errors import DomainError, InvalidParams, InvariantError
from fuzzjack.utils.utils import as_points, unit_points

logger = logging.getLogger(__name__)

# sampled moduli never use more grid points than this
MAX_MODULUS_POINTS = 20001


def _check_domain(xs: np.ndarray):
    if not np.all(np.isfinite(xs)):
        raise DomainError(f"functions are defined on [0, 1], got x = {xs[~np.isfinite(xs)][0]}")
    outside = (xs < 0) | (xs > 1)
    if np.any(outside):
        raise DomainError(f"functions are defined on [0, 1], got x = {xs[outside][0]}")


class FuzzyFunction:
    r"""
    A continuous map :math:`f: [0, 1] \to \mathbb{E}^1` evaluated on a fixed `AlphaGrid`.

    Subclasses implement `_evaluate`, which returns the cuts of :math:`f(x)` for an
    array of ``x`` as an array of shape ``(len(xs), m + 1, 2)``.

    Args:
        grid (AlphaGrid): the levels of the values.
        name (str): label used in logs and reports.
        analytic_modulus (callable): :math:`\delta \mapsto \omega^{\mathcal{F}}(f, \delta)` if known in closed form.
        lipschitz (float): a Lipschitz constant of :math:`f` with respect to :math:`d_\infty`, if known.
    """

    kind = "callable"
    #: nestedness slack of the returned values
    value_tol = TOL_NESTED

    def __init__(self, grid: AlphaGrid, name: str = None,
                 analytic_modulus: Callable[[float], float] = None,
                 lipschitz: float = None):
        self.grid = grid
        self.name = name or self.__class__.__name__
        self.analytic_modulus = analytic_modulus
        self.lipschitz = lipschitz

    def _evaluate(self, xs: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def evaluate(self, xs) -> np.ndarray:
        """Cuts of :math:`f(x)` for every ``x`` in ``xs``, shape ``(len(xs), m + 1, 2)``."""
        xs = as_points(xs)
        _check_domain(xs)
        return self._evaluate(xs)

    def eval(self, x: float) -> FuzzyNumber:
        return FuzzyNumber(self.grid, self.evaluate(x)[0], tol=self.value_tol)

    def __call__(self, x: float) -> FuzzyNumber:
        return self.eval(x)

    def values(self, xs) -> List[FuzzyNumber]:
        return [FuzzyNumber(self.grid, c, tol=self.value_tol) for c in self.evaluate(xs)]

    def alpha_slice(self, alpha: float) -> "IntervalFunction":
        return alpha_slice(self, alpha)

    def _slice_modulus(self, idx: int) -> Optional[Callable[[float], float]]:
        # closed form modulus of the level-idx slice, if any
        return None

    def __str__(self):
        return f"{self.kind} function {self.name}"


class CallableFuzzyFunction(FuzzyFunction):
    """
    Wraps a python callable ``x -> FuzzyNumber``.
    """

    def __init__(self, evaluator: Callable[[float], FuzzyNumber], grid: AlphaGrid, **kwargs):
        super().__init__(grid, **kwargs)
        self.evaluator = evaluator

    def _evaluate(self, xs):
        out = np.empty((len(xs), len(self.grid), 2))
        for i, x in enumerate(xs):
            value = self.evaluator(float(x))
            if value.grid != self.grid:
                raise InvalidParams(f"{self.name} returned a value on another grid at x = {x}")
            out[i] = value.cuts
        return out


class SampledFuzzyFunction(FuzzyFunction):
    """
    Fuzzy function given by its values at sample points :math:`0 = x_0 < \\dots < x_N = 1`.
    Between samples each endpoint of each level is interpolated linearly, which keeps
    the cuts nested.

    Args:
        xs (array-like): the sample points.
        cuts (array-like): shape ``(N + 1, m + 1, 2)``, the cuts of every sample.
        grid (AlphaGrid): the levels.
    """

    kind = "sampled"

    def __init__(self, xs, cuts, grid: AlphaGrid, name: str = None):
        xs = np.array(xs, dtype=float)
        cuts = np.array(cuts, dtype=float)
        if xs.ndim != 1 or len(xs) < 2:
            raise InvariantError("a sampled function needs at least 2 samples")
        if xs[0] != 0 or xs[-1] != 1:
            raise InvariantError(f"samples should start at x = 0 and end at x = 1, got {xs[0]} and {xs[-1]}")
        bad = np.nonzero(np.diff(xs) <= 0)[0]
        if len(bad):
            raise InvariantError(f"sample points should be strictly increasing, see samples {bad[0]} and {bad[0] + 1}")
        if cuts.shape != (len(xs), len(grid), 2):
            raise InvariantError(f"expected cuts of shape {(len(xs), len(grid), 2)}, got {cuts.shape}")
        for i, c in enumerate(cuts):
            try:
                FuzzyNumber(grid, c)
            except InvariantError as e:
                raise InvariantError(f"{e} at sample {i}") from e
        xs.setflags(write=False)
        cuts.setflags(write=False)
        self.xs = xs
        self.cuts = cuts
        slopes = np.abs(np.diff(cuts, axis=0)) / np.diff(xs)[:, None, None]
        super().__init__(grid, name=name or "sampled", lipschitz=float(slopes.max()))

    def _evaluate(self, xs):
        idx = np.clip(np.searchsorted(self.xs, xs, side="right") - 1, 0, len(self.xs) - 2)
        t = (xs - self.xs[idx]) / (self.xs[idx + 1] - self.xs[idx])
        t = t[:, None, None]
        return (1 - t) * self.cuts[idx] + t * self.cuts[idx + 1]


class IntervalFunction:
    r"""
    An interval-valued function :math:`[0, 1] \to \mathcal{K}_C`.

    Args:
        evaluator (callable): maps an array ``xs`` to the endpoint arrays ``(lo, hi)``.
        name (str): label used in logs and reports.
        analytic_modulus (callable): :math:`\delta \mapsto \omega^{\mathcal{K}}(f, \delta)` if known.
        lipschitz (float): Lipschitz constant with respect to the Hausdorff metric, if known.
    """

    def __init__(self, evaluator: Callable[[np.ndarray], Tuple[np.ndarray, np.ndarray]],
                 name: str = "interval function",
                 analytic_modulus: Callable[[float], float] = None,
                 lipschitz: float = None):
        self.evaluator = evaluator
        self.name = name
        self.analytic_modulus = analytic_modulus
        self.lipschitz = lipschitz

    def evaluate(self, xs) -> Tuple[np.ndarray, np.ndarray]:
        xs = as_points(xs)
        _check_domain(xs)
        lo, hi = self.evaluator(xs)
        return np.broadcast_to(lo, xs.shape).astype(float), np.broadcast_to(hi, xs.shape).astype(float)

    def eval(self, x: float) -> Interval:
        lo, hi = self.evaluate(x)
        return Interval(lo[0], hi[0])

    def __call__(self, x: float) -> Interval:
        return self.eval(x)

    def widths(self, xs) -> np.ndarray:
        lo, hi = self.evaluate(xs)
        return hi - lo

    def __str__(self):
        return f"interval function {self.name}"


class ModulusValue:
    """A modulus of continuity value together with its provenance."""

    __slots__ = ("value", "kind")

    def __init__(self, value: float, kind: ModulusKind):
        self.value = float(value)
        self.kind = kind

    def __repr__(self):
        return f"ModulusValue({self.value!r}, {self.kind.value})"


def evaluate(f: FuzzyFunction, x: float) -> FuzzyNumber:
    return f.eval(x)


def alpha_slice(f: FuzzyFunction, alpha: float) -> IntervalFunction:
    r"""
    The level function :math:`f_\alpha(x) = [f(x)]_\alpha`. ``alpha`` must be a grid level.
    """
    idx = f.grid.index(alpha)

    def evaluator(xs):
        cuts = f.evaluate(xs)[:, idx]
        return cuts[:, 0], cuts[:, 1]

    return IntervalFunction(evaluator, name=f"{f.name}[alpha={alpha:g}]",
                            analytic_modulus=f._slice_modulus(idx), lipschitz=f.lipschitz)


def _modulus_grid(delta: float, density: int) -> np.ndarray:
    n_points = int(np.ceil(density / delta)) + 1
    if n_points > MAX_MODULUS_POINTS:
        logger.debug(f"modulus grid for delta={delta} capped at {MAX_MODULUS_POINTS} points")
        n_points = MAX_MODULUS_POINTS
    return unit_points(max(n_points, 2))


def _max_lag(separation: float, step: float) -> int:
    # largest lag with lag * step < separation
    return max(int(np.ceil(separation / step - 1e-9)) - 1, 0)


def _lagged_sup(values: np.ndarray, max_lag: int) -> float:
    # values: (n_points, k) endpoint vectors, distance is the max norm
    sup = 0.0
    for lag in range(1, min(max_lag, len(values) - 1) + 1):
        sup = max(sup, float(np.max(np.abs(values[lag:] - values[:-lag]))))
    return sup


def _sampled_modulus(values_of: Callable[[np.ndarray], np.ndarray], delta: float,
                     density: int, widen: bool = False) -> Tuple[float, float]:
    xs = _modulus_grid(delta, density)
    step = xs[1] - xs[0]
    separation = delta + step if widen else delta
    max_lag = _max_lag(separation, step)
    if max_lag == 0:
        raise InvalidParams(f"delta={delta:g} is below the modulus grid step {step:g}, "
                            f"no sampled pair is closer than delta")
    return _lagged_sup(values_of(xs), max_lag), step


def _fuzzy_values(f: FuzzyFunction):
    return lambda xs: f.evaluate(xs).reshape(len(xs), -1)


def _interval_values(f_alpha: IntervalFunction):
    return lambda xs: np.stack(f_alpha.evaluate(xs), axis=-1)


def modulus_fuzzy(f: FuzzyFunction, delta: float, density: int = 50) -> float:
    r"""
    :math:`\omega^{\mathcal{F}}(f, \delta) = \sup\{d_\infty(f(x), f(y)) : |x - y| < \delta\}`.

    The closed form is used when ``f`` carries one. Otherwise the supremum is sampled on a
    uniform grid with ``density`` steps per :math:`\delta`, which gives a lower estimate.
    """
    if delta <= 0:
        raise InvalidParams(f"delta should be positive, got {delta}")
    if f.analytic_modulus is not None:
        return float(f.analytic_modulus(delta))
    return _sampled_modulus(_fuzzy_values(f), delta, density)[0]


def modulus_interval(f_alpha: IntervalFunction, delta: float, density: int = 50) -> float:
    r"""
    :math:`\omega^{\mathcal{K}}(f_\alpha, \delta)`, analytic when available, otherwise sampled
    like `modulus_fuzzy`.
    """
    if delta <= 0:
        raise InvalidParams(f"delta should be positive, got {delta}")
    if f_alpha.analytic_modulus is not None:
        return float(f_alpha.analytic_modulus(delta))
    return _sampled_modulus(_interval_values(f_alpha), delta, density)[0]


def _certified(values_of, lipschitz, delta, density) -> Optional[float]:
    if lipschitz is None:
        return None
    # any pair closer than delta rounds to grid points closer than delta + step,
    # each rounding moves the value by at most lipschitz * step / 2
    sup, step = _sampled_modulus(values_of, delta, density, widen=True)
    return sup + lipschitz * step


def modulus_upper(f: FuzzyFunction, delta: float, density: int = 50) -> Optional[float]:
    """
    A certified upper bound of :math:`\\omega^{\\mathcal{F}}(f, \\delta)` from the grid
    supremum and the Lipschitz constant of ``f``. ``None`` if ``f`` has no known
    Lipschitz constant.
    """
    if delta <= 0:
        raise InvalidParams(f"delta should be positive, got {delta}")
    return _certified(_fuzzy_values(f), f.lipschitz, delta, density)


def modulus(f: FuzzyFunction, delta: float, density: int = 50) -> ModulusValue:
    """
    The best available modulus value: analytic, then certified, then a lower estimate.
    """
    if f.analytic_modulus is not None:
        return ModulusValue(f.analytic_modulus(delta), ModulusKind.analytic)
    upper = modulus_upper(f, delta, density)
    if upper is not None:
        return ModulusValue(upper, ModulusKind.certified)
    return ModulusValue(modulus_fuzzy(f, delta, density), ModulusKind.lower_estimate)


def modulus_of_interval(f_alpha: IntervalFunction, delta: float, density: int = 50) -> ModulusValue:
    if f_alpha.analytic_modulus is not None:
        return ModulusValue(f_alpha.analytic_modulus(delta), ModulusKind.analytic)
    upper = _certified(_interval_values(f_alpha), f_alpha.lipschitz, delta, density)
    if upper is not None:
        return ModulusValue(upper, ModulusKind.certified)
    return ModulusValue(modulus_interval(f_alpha, delta, density), ModulusKind.lower_estimate)


def _nesting_steps(f: FuzzyFunction, probes: int) -> Tuple[np.ndarray, np.ndarray]:
    if probes < 2:
        raise InvalidParams(f"at least 2 probes are needed, got {probes}")
    cuts = f.evaluate(unit_points(probes))
    return np.diff(cuts[..., 0], axis=0), np.diff(cuts[..., 1], axis=0)


def check_nested_decreasing(f: FuzzyFunction, probes: int = 257, tol: float = TOL_INCL) -> bool:
    """
    Probe :math:`f(y) \\subseteq f(x)` for :math:`x \\leq y`. Inclusion is transitive, so
    comparing neighbouring probes covers every probe pair.
    """
    dlo, dhi = _nesting_steps(f, probes)
    return bool(np.all(dlo >= -tol) and np.all(dhi <= tol))


def check_nested_increasing(f: FuzzyFunction, probes: int = 257, tol: float = TOL_INCL) -> bool:
    """
    Probe :math:`f(y) \\supseteq f(x)` for :math:`x \\leq y`.
    """
    dlo, dhi = _nesting_steps(f, probes)
    return bool(np.all(dlo <= tol) and np.all(dhi >= -tol))


def gh_chain_breaks(f: FuzzyFunction, n: int, direction: str = "forward",
                    tol: float = TOL_MONO) -> List[int]:
    """
    Indices ``j`` where the gH-difference between the node values :math:`f(j/n)` and
    :math:`f((j+1)/n)` fails to exist. ``forward`` tests :math:`f(a_j) \\ominus_{gH} f(a_{j+1})`,
    ``backward`` tests :math:`f(a_{j+1}) \\ominus_{gH} f(a_j)`.
    """
    if n < 1:
        raise InvalidParams(f"n should be at least 1, got {n}")
    if direction not in ("forward", "backward"):
        raise InvalidParams(f"direction should be 'forward' or 'backward', got {direction!r}")
    nodes = f.values(np.arange(n + 1) / n)
    breaks = []
    for j in range(n):
        left, right = nodes[j], nodes[j + 1]
        if direction == "backward":
            left, right = right, left
        if not gh_exists(left, right, tol):
            breaks.append(j)
    return breaks


def check_gh_chain(f: FuzzyFunction, n: int, direction: str = "forward", tol: float = TOL_MONO) -> bool:
    return not gh_chain_breaks(f, n, direction, tol)


def check_length_monotone(f_alpha: IntervalFunction, direction: str = "decreasing",
                          probes: int = 257, tol: float = TOL_INCL) -> bool:
    """
    Probe ``len(f(x)) >= len(f(y))`` (``decreasing``) or ``<=`` (``increasing``) for :math:`x \\leq y`.
    """
    if direction not in ("decreasing", "increasing"):
        raise InvalidParams(f"direction should be 'decreasing' or 'increasing', got {direction!r}")
    steps = np.diff(f_alpha.widths(unit_points(probes)))
    if direction == "decreasing":
        return bool(np.all(steps <= tol))
    return bool(np.all(steps >= -tol))


def check_level_modulus(f: FuzzyFunction, deltas: Sequence[float], density: int = 50) -> float:
    r"""
    Largest value of :math:`\omega^{\mathcal{K}}(f_\alpha, \delta) - \omega^{\mathcal{F}}(f, \delta)`
    over all grid levels and the given ``deltas``. Never positive up to rounding.
    """
    worst = -np.inf
    for delta in deltas:
        w = modulus_fuzzy(f, delta, density)
        for alpha in f.grid.levels:
            slack = modulus_interval(alpha_slice(f, alpha), delta, density) - w
            worst = max(worst, slack)
    return float(worst)


def check_modulus_properties(f: FuzzyFunction, deltas: Sequence[float] = (0.05, 0.1),
                             ns: Sequence[int] = (2, 3, 4), lams: Sequence[float] = (0.5, 1.5, 2.5),
                             tol: float = 1e-12, density: int = 50) -> List[str]:
    """
    Check subadditivity, :math:`\\omega(n\\delta) \\leq n\\omega(\\delta)` and
    :math:`\\omega(\\lambda\\delta) \\leq (\\lambda + 1)\\omega(\\delta)`. Returns descriptions
    of the violated instances, empty if all hold.
    """
    def w(d):
        return modulus_fuzzy(f, d, density)

    violations = []
    for d1 in deltas:
        for d2 in deltas:
            if w(d1 + d2) > w(d1) + w(d2) + tol:
                violations.append(f"subadditivity at ({d1}, {d2})")
        for n in ns:
            if w(n * d1) > n * w(d1) + tol:
                violations.append(f"integer scaling n={n} at {d1}")
        for lam in lams:
            if w(lam * d1) > (lam + 1) * w(d1) + tol:
                violations.append(f"real scaling lambda={lam} at {d1}")
    return violations


def sup_metric(f: FuzzyFunction, g: FuzzyFunction, samples: int = 2049) -> float:
    """
    :math:`D(f, g) = \\sup_x d_\\infty(f(x), g(x))`, sampled on ``samples`` uniform points.
    """
    if f.grid != g.grid:
        # raises GridMismatch
        d_infty(f.eval(0.0), g.eval(0.0))
    xs = unit_points(samples)
    a = f.evaluate(xs)
    b = g.evaluate(xs)
    return float(np.max(hausdorff_endpoints(a[..., 0], a[..., 1], b[..., 0], b[..., 1])))

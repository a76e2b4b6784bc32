# -*- coding: utf-8 -*-

"""
Measured approximation errors and the bounds they are checked against.
"""

import logging
from typing import Dict, Optional

import numpy as np

from fuzzjack.approx.approximant import Approximant, IntervalApproximant
from fuzzjack.fuzzy.function import FuzzyFunction, IntervalFunction, modulus, modulus_of_interval
from fuzzjack.interval.interval import hausdorff_endpoints
from fuzzjack.utils.configs import Method, ModulusKind, REPORT_TOL, Verdict
from fuzzjack.utils.errors import InvalidParams
from fuzzjack.utils.utils import unit_points

logger = logging.getLogger(__name__)

BOUND_FORMULAS = {
    Method.gh_dec: "2*omega(f,1/n) + eps",
    Method.gh_inc: "2*omega(f,1/n) + eps",
    Method.g_diff: "(2n+2)*omega(f,1/n) + eps",
    Method.trapezoid: "3*omega(f,1/n)",
    Method.interval_gh: "2*omega_K(f_alpha,1/n) + eps",
}


def bound_value(method: Method, n: int, omega: float, eps: Optional[float]) -> float:
    """
    >>> bound_value(Method.g_diff, 4, 0.5, 0.01)
    5.01
    """
    if method is Method.trapezoid:
        return 3 * omega
    if method is Method.g_diff:
        return (2 * n + 2) * omega + eps
    return 2 * omega + eps


def sample_points(samples: int, n: int, delta: float) -> np.ndarray:
    """
    ``samples`` uniform points together with the nodes :math:`a_j` and the band
    edges :math:`a_j \\pm \\delta` inside [0, 1], sorted and without repeats.

    >>> sample_points(3, 2, 0.125).tolist()
    [0.0, 0.125, 0.375, 0.5, 0.625, 0.875, 1.0]
    """
    if samples < 2:
        raise InvalidParams(f"at least 2 samples are needed, got {samples}")
    nodes = np.arange(n + 1) / n
    xs = np.concatenate([unit_points(samples), nodes, nodes - delta, nodes + delta])
    return np.unique(np.clip(xs, 0.0, 1.0))


class ErrorReport:
    r"""
    Outcome of one (method, n) run.

    ``sup_distance`` is the largest of the ``per_sample`` distances and the run passes
    when it does not exceed ``bound_value`` by more than ``report_tol``. A bound computed
    from a modulus lower estimate only gives an indicative verdict.
    """

    def __init__(self, method: Method, n: int, delta: Optional[float], eps: Optional[float],
                 sup_distance: Optional[float] = None, modulus_value: Optional[float] = None,
                 modulus_kind: Optional[ModulusKind] = None, bound_value: Optional[float] = None,
                 per_sample: np.ndarray = None, report_tol: float = REPORT_TOL,
                 function: str = None, alpha: Optional[float] = None, reason: Optional[str] = None):
        self.method = method
        self.n = n
        self.delta = delta
        self.eps = eps
        self.sup_distance = sup_distance
        self.modulus_value = modulus_value
        self.modulus_kind = modulus_kind
        self.bound_value = bound_value
        self.per_sample = np.zeros((0, 2)) if per_sample is None else np.asarray(per_sample, dtype=float)
        self.report_tol = report_tol
        self.function = function
        self.alpha = alpha
        self.reason = reason

    @classmethod
    def skipped_run(cls, method: Method, n: int, delta, eps, reason: str, function: str = None):
        return cls(method, n, delta, eps, function=function, reason=reason)

    @property
    def skipped(self) -> bool:
        return self.reason is not None

    @property
    def bound_formula(self) -> str:
        return BOUND_FORMULAS[self.method]

    @property
    def passed(self) -> Optional[bool]:
        """The measured comparison, ``None`` for skipped runs."""
        if self.skipped:
            return None
        return bool(self.sup_distance <= self.bound_value + self.report_tol)

    @property
    def verdict(self) -> Verdict:
        if self.skipped:
            return Verdict.skipped
        if not self.modulus_kind.is_upper_bound:
            return Verdict.indicative
        return Verdict.passed if self.passed else Verdict.failed

    def to_dict(self) -> Dict:
        return {
            "method": self.method.value,
            "n": self.n,
            "delta": self.delta,
            "eps": self.eps,
            "function": self.function,
            "alpha": self.alpha,
            "sup_distance": self.sup_distance,
            "modulus": self.modulus_value,
            "modulus_kind": None if self.modulus_kind is None else self.modulus_kind.value,
            "bound": self.bound_value,
            "bound_formula": self.bound_formula,
            "pass": self.verdict.value,
            "reason": self.reason,
            "report_tol": self.report_tol,
            "per_sample": self.per_sample.tolist(),
        }

    @classmethod
    def from_dict(cls, d: Dict) -> "ErrorReport":
        kind = d.get("modulus_kind")
        return cls(
            Method(d["method"]), d["n"], d["delta"], d["eps"],
            sup_distance=d["sup_distance"],
            modulus_value=d["modulus"],
            modulus_kind=None if kind is None else ModulusKind(kind),
            bound_value=d["bound"],
            per_sample=d["per_sample"] or None,
            report_tol=d.get("report_tol", REPORT_TOL),
            function=d.get("function"),
            alpha=d.get("alpha"),
            reason=d.get("reason"),
        )

    def __str__(self):
        if self.skipped:
            return f"{self.method.value} n={self.n}: skipped, {self.reason}"
        return (f"{self.method.value} n={self.n}: sup distance {self.sup_distance:.3e}, "
                f"bound {self.bound_value:.3e} ({self.modulus_kind.value} modulus), {self.verdict.value}")


def _finish(report_args: Dict, xs: np.ndarray, distances: np.ndarray) -> ErrorReport:
    report = ErrorReport(sup_distance=float(distances.max()),
                         per_sample=np.stack([xs, distances], axis=-1), **report_args)
    logger.info(str(report))
    return report


def sup_distance(f: FuzzyFunction, approximant: Approximant, samples: int = 2049,
                 report_tol: float = REPORT_TOL, modulus_density: int = 50) -> ErrorReport:
    """
    Measure :math:`\\sup_x d_\\infty(f(x), A(x))` on `sample_points` and compare it with the
    bound of the approximant's method, using the best modulus available for ``f``.
    """
    n, delta = approximant.n, approximant.delta
    xs = sample_points(samples, n, delta)
    a = f.evaluate(xs)
    b = approximant.evaluate(xs)
    distances = np.max(hausdorff_endpoints(a[..., 0], a[..., 1], b[..., 0], b[..., 1]), axis=1)
    omega = modulus(f, 1 / n, modulus_density)
    report_args = dict(
        method=approximant.method, n=n, delta=delta, eps=approximant.eps,
        modulus_value=omega.value, modulus_kind=omega.kind,
        bound_value=bound_value(approximant.method, n, omega.value, approximant.eps),
        report_tol=report_tol, function=f.name,
    )
    return _finish(report_args, xs, distances)


def sup_distance_interval(f_alpha: IntervalFunction, approximant: IntervalApproximant,
                          samples: int = 2049, report_tol: float = REPORT_TOL,
                          modulus_density: int = 50, alpha: float = None) -> ErrorReport:
    """
    Interval counterpart of `sup_distance` with the Hausdorff distance and the bound
    :math:`2\\omega^{\\mathcal{K}}(f_\\alpha, 1/n) + \\varepsilon`.
    """
    n, delta = approximant.n, approximant.delta
    xs = sample_points(samples, n, delta)
    alo, ahi = f_alpha.evaluate(xs)
    blo, bhi = approximant.evaluate(xs)
    distances = hausdorff_endpoints(alo, ahi, blo, bhi)
    omega = modulus_of_interval(f_alpha, 1 / n, modulus_density)
    report_args = dict(
        method=Method.interval_gh, n=n, delta=delta, eps=approximant.eps,
        modulus_value=omega.value, modulus_kind=omega.kind,
        bound_value=bound_value(Method.interval_gh, n, omega.value, approximant.eps),
        report_tol=report_tol, function=f_alpha.name, alpha=alpha,
    )
    return _finish(report_args, xs, distances)

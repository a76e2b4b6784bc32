# -*- coding: utf-8 -*-
from enum import Enum
import logging
import os
from typing import Dict, List, Optional, Union

import yaml

from fuzzjack.utils.errors import ConfigError

logger = logging.getLogger(__name__)

#: environment variable overriding ``ExperimentConfig.output``
OUT_ENV_KEY = "FUZZJACK_OUT"

# tolerances shared by the arithmetic layers
TOL_NESTED = 1e-12
TOL_MONO = 1e-9
TOL_INCL = 1e-9
REPORT_TOL = 1e-9


class Method(Enum):
    """
    Approximation operators.
    """
    #: :math:`u_n + \sum \psi_j(x) (u_j \ominus_{gH} u_{j+1})`, for downward nested functions.
    gh_dec = "gh_dec"
    #: :math:`u_0 + \sum (1-\psi_j(x)) (u_{j+1} \ominus_{gH} u_j)`, for upward nested functions.
    gh_inc = "gh_inc"
    #: like ``gh_dec`` but with the g-difference, which always exists.
    g_diff = "g_diff"
    #: trapezoidal partition of unity, no hypothesis on the function.
    trapezoid = "trapezoid"
    #: interval-valued construction applied to one level slice.
    interval_gh = "interval_gh"

    @classmethod
    def fuzzy_methods(cls) -> List["Method"]:
        return [cls.gh_dec, cls.gh_inc, cls.g_diff, cls.trapezoid]

    @classmethod
    def parse_list(cls, value) -> List["Method"]:
        if isinstance(value, str):
            value = [v.strip() for v in value.split(",") if v.strip()]
        methods = []
        for v in value:
            if isinstance(v, Method):
                methods.append(v)
            elif v == "all":
                methods.extend(cls.fuzzy_methods())
            else:
                try:
                    methods.append(cls(v))
                except ValueError:
                    raise ConfigError(f"unknown method {v!r}, choose from {[m.value for m in cls]} or 'all'")
        # keep order, drop duplicates
        return list(dict.fromkeys(methods))


class ModulusKind(Enum):
    """
    Provenance of a modulus of continuity value.
    """
    #: closed form supplied with the function.
    analytic = "analytic"
    #: grid supremum corrected by a Lipschitz bound, an upper bound.
    certified = "certified"
    #: plain grid supremum, a lower estimate.
    lower_estimate = "lower estimate"

    @property
    def is_upper_bound(self) -> bool:
        return self is not ModulusKind.lower_estimate


class Verdict(Enum):
    """
    Outcome of a bound verification.
    """
    passed = "true"
    failed = "false"
    #: the bound was checked against a modulus lower estimate
    indicative = "indicative"
    skipped = "skipped"


class ApproxConfig:
    """Numerical settings shared by the builders and the diagnostics.

    Parameters
    ----------
    alpha_levels : int, optional
        Number of subintervals ``m`` of the uniform :math:`\\alpha` grid. Default is 100.
    tol_mono : float, optional
        Slack allowed in the monotonicity checks of the gH existence test. Default is :math:`10^{-9}`.
    tol_incl : float, optional
        Slack allowed in cut inclusion checks. Default is :math:`10^{-9}`.
    modulus_density : int, optional
        Grid subdivisions ``K`` per :math:`\\delta` window when a modulus of continuity
        has to be sampled. Default is 50.
    probes : int, optional
        Number of probe points of the hypothesis checks. Default is 257.
    diameter_probes : int, optional
        Number of probe points used to bound the diameter of the range of the
        function (the ``M`` of the :math:`\\epsilon'` rule). Default is 65.
    report_tol : float, optional
        Slack allowed when comparing a measured distance with its bound. Default is :math:`10^{-9}`.
    jewett_max_m : int, optional
        Cap on the power ``m`` tried by the Jewett polynomial search. Default is :math:`10^7`.
    """

    def __init__(
        self,
        alpha_levels: int = 100,
        tol_mono: float = TOL_MONO,
        tol_incl: float = TOL_INCL,
        modulus_density: int = 50,
        probes: int = 257,
        diameter_probes: int = 65,
        report_tol: float = REPORT_TOL,
        jewett_max_m: int = 10 ** 7,
    ):
        self._alpha_levels = None
        self.alpha_levels = alpha_levels
        self.tol_mono = tol_mono
        self.tol_incl = tol_incl
        self.tol_nested = TOL_NESTED
        self.modulus_density = modulus_density
        self._probes = None
        self.probes = probes
        self.diameter_probes = diameter_probes
        self.report_tol = report_tol
        self.jewett_max_m = jewett_max_m

    @property
    def alpha_levels(self):
        return self._alpha_levels

    @alpha_levels.setter
    def alpha_levels(self, v):
        if int(v) != v or v < 1:
            raise ConfigError(f"alpha levels should be a positive integer, got {v}")
        self._alpha_levels = int(v)

    @property
    def probes(self):
        return self._probes

    @probes.setter
    def probes(self, v):
        if int(v) != v or v < 2:
            raise ConfigError(f"at least 2 probes are needed, got {v}")
        self._probes = int(v)

    def copy(self) -> "ApproxConfig":
        new = self.__class__.__new__(self.__class__)
        new.__dict__ = self.__dict__.copy()
        return new

    def __str__(self):
        attrs = ["alpha_levels", "tol_mono", "tol_incl", "modulus_density", "probes", "report_tol"]
        lines = []
        for attr in attrs:
            attr_value = getattr(self, attr)
            lines.append(f"\n{attr}: {attr_value}")
        return "".join(lines)


class ExperimentConfig:
    r"""Configuration of an approximation experiment.

    Exactly one of ``function`` (a catalog name) and ``function_file``
    (a JSON sampled function) should be given.

    Parameters
    ----------
    function : str, optional
        Catalog entry name, see :func:`fuzzjack.fuzzy.catalog.catalog`.
    function_params : dict, optional
        Keyword parameters of the catalog entry.
    function_file : str, optional
        Path to a JSON function file.
    methods : list of `Method` or str
        Methods to run. ``"all"`` expands to `Method.fuzzy_methods`.
    n_list : list of int
        Numbers of subintervals.
    delta_rule : float
        :math:`\delta = \text{delta\_rule} / (2n)`, in :math:`(0, 1)`. Default is 0.5.
    epsilon : float
        Target slack :math:`\varepsilon \in (0, 1/2)` of the Jewett based methods. Default is :math:`10^{-3}`.
    samples : int
        Number of uniform sample points of the error measurement. Default is 2049.
    alpha_levels : int
        Number of subintervals of the :math:`\alpha` grid. Default is 100.
    alpha : float
        Grid level used by `Method.interval_gh`. Default is 0.
    output : str
        Output directory. Overridden by the ``FUZZJACK_OUT`` environment variable.
    seed : int
        Seed of the randomized property suites.
    strict : bool
        Raise instead of skipping when a method's hypotheses fail.
    """

    def __init__(
        self,
        function: Optional[str] = None,
        function_params: Optional[Dict] = None,
        function_file: Optional[str] = None,
        methods: Union[str, List] = "all",
        n_list: List[int] = (4, 8, 16),
        delta_rule: float = 0.5,
        epsilon: float = 1e-3,
        samples: int = 2049,
        alpha_levels: int = 100,
        alpha: float = 0.0,
        output: str = "./fuzzjack_out",
        seed: int = 9012,
        strict: bool = False,
    ):
        if (function is None) == (function_file is None):
            raise ConfigError("exactly one of function and function file should be set")
        self.function = function
        self.function_params = dict(function_params or {})
        self.function_file = function_file
        self.methods: List[Method] = Method.parse_list(methods)
        if not self.methods:
            raise ConfigError("no method selected")
        self._n_list = None
        self.n_list = n_list
        self._delta_rule = None
        self.delta_rule = delta_rule
        self._epsilon = None
        self.epsilon = epsilon
        self._samples = None
        self.samples = samples
        if int(alpha_levels) != alpha_levels or alpha_levels < 1:
            raise ConfigError(f"alpha levels should be a positive integer, got {alpha_levels}")
        self.alpha_levels = int(alpha_levels)
        if not 0 <= alpha <= 1:
            raise ConfigError(f"alpha should lie in [0, 1], got {alpha}")
        self.alpha = float(alpha)
        env_out = os.environ.get(OUT_ENV_KEY)
        if env_out:
            logger.info(f"output dir {output} overridden by {OUT_ENV_KEY}={env_out}")
            output = env_out
        self.output = output
        self.seed = int(seed)
        self.strict = bool(strict)

    @property
    def n_list(self):
        return self._n_list

    @n_list.setter
    def n_list(self, v):
        if isinstance(v, (int, str)):
            v = [v] if isinstance(v, int) else [s for s in v.split(",") if s.strip()]
        try:
            n_list = [int(n) for n in v]
        except (TypeError, ValueError):
            raise ConfigError(f"n list should be integers, got {v}")
        if not n_list or any(n < 1 for n in n_list):
            raise ConfigError(f"each n should be at least 1, got {n_list}")
        self._n_list = n_list

    @property
    def delta_rule(self):
        return self._delta_rule

    @delta_rule.setter
    def delta_rule(self, v):
        if not 0 < v < 1:
            raise ConfigError(f"delta rule should lie in (0, 1), got {v}")
        self._delta_rule = float(v)

    @property
    def epsilon(self):
        return self._epsilon

    @epsilon.setter
    def epsilon(self, v):
        if not 0 < v < 0.5:
            raise ConfigError(f"epsilon should lie in (0, 1/2), got {v}")
        self._epsilon = float(v)

    @property
    def samples(self):
        return self._samples

    @samples.setter
    def samples(self, v):
        if int(v) != v or v < 2:
            raise ConfigError(f"at least 2 samples are needed, got {v}")
        self._samples = int(v)

    def delta(self, n: int) -> float:
        return self.delta_rule / (2 * n)

    def approx_config(self) -> ApproxConfig:
        return ApproxConfig(alpha_levels=self.alpha_levels)

    # yaml keys follow the space separated style of the example parameter files
    _yaml_keys = {
        "function": "function",
        "function params": "function_params",
        "function file": "function_file",
        "methods": "methods",
        "n list": "n_list",
        "delta rule": "delta_rule",
        "epsilon": "epsilon",
        "samples": "samples",
        "alpha levels": "alpha_levels",
        "alpha": "alpha",
        "output dir": "output",
        "seed": "seed",
        "strict": "strict",
    }

    @classmethod
    def from_dict(cls, param: Dict, **overrides) -> "ExperimentConfig":
        unknown = set(param) - set(cls._yaml_keys)
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        kwargs = {cls._yaml_keys[k]: v for k, v in param.items()}
        kwargs.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**kwargs)

    @classmethod
    def from_yaml(cls, path, **overrides) -> "ExperimentConfig":
        with open(path, encoding="utf-8") as fin:
            param = yaml.safe_load(fin)
        if not isinstance(param, dict):
            raise ConfigError(f"{path} should contain a mapping")
        return cls.from_dict(param, **overrides)

    def to_dict(self) -> Dict:
        return {
            "function": self.function,
            "function params": self.function_params,
            "function file": self.function_file,
            "methods": [m.value for m in self.methods],
            "n list": self.n_list,
            "delta rule": self.delta_rule,
            "epsilon": self.epsilon,
            "samples": self.samples,
            "alpha levels": self.alpha_levels,
            "alpha": self.alpha,
            "output dir": self.output,
            "seed": self.seed,
            "strict": self.strict,
        }

    def copy(self):
        new = self.__class__.__new__(self.__class__)
        new.__dict__ = self.__dict__.copy()
        new.function_params = dict(self.function_params)
        new.methods = list(self.methods)
        new._n_list = list(self._n_list)
        return new

    def __str__(self):
        lines = []
        for key, value in self.to_dict().items():
            lines.append(f"\n{key}: {value}")
        return "".join(lines)

# -*- coding: utf-8 -*-

"""
Step function families on the nodes :math:`a_j = j / n`.

`PsiFamily` holds one Jewett polynomial step per node, switching from 1 to 0 inside
:math:`[a_j - \\delta, a_j + \\delta]`. `PhiFamily` is the trapezoidal partition of unity
built from piecewise linear ramps.
"""

import logging
from typing import Dict, List, Tuple

import numpy as np

from fuzzjack.smoothstep.jewett import JewettPoly, jewett_poly
from fuzzjack.utils.errors import InvalidParams
from fuzzjack.utils.utils import as_points

logger = logging.getLogger(__name__)


def _check_n_delta(n: int, delta: float):
    if n < 1:
        raise InvalidParams(f"n should be at least 1, got {n}")
    if not 0 < delta < 1 / (2 * n):
        raise InvalidParams(f"delta should lie in (0, 1/(2n)) = (0, {1 / (2 * n)}), got {delta}")


class PsiFamily:
    r"""
    The steps :math:`\psi_0, \dots, \psi_n` with

    - :math:`\psi_j(x) < \varepsilon` for :math:`x \geq a_j + \delta`, :math:`j < n`;
    - :math:`1 - \psi_j(x) < \varepsilon` for :math:`x \leq a_j - \delta`, :math:`j > 0`.

    ``complement()`` gives the family :math:`1 - \psi_j`.
    """

    def __init__(self, n: int, delta: float, eps: float, members: List[JewettPoly],
                 complemented: bool = False):
        assert len(members) == n + 1
        self.n = n
        self.delta = delta
        self.eps = eps
        self.members = members
        self.complemented = complemented

    @property
    def nodes(self) -> np.ndarray:
        return np.arange(self.n + 1) / self.n

    def evaluate(self, xs) -> np.ndarray:
        """Values of all members, shape ``(len(xs), n + 1)``."""
        xs = as_points(xs)
        values = np.stack([p(xs) for p in self.members], axis=-1)
        if self.complemented:
            return 1 - values
        return values

    def __call__(self, j: int, x):
        value = self.members[j](x)
        return 1 - value if self.complemented else value

    def complement(self) -> "PsiFamily":
        return PsiFamily(self.n, self.delta, self.eps, self.members, not self.complemented)

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "delta": self.delta,
            "eps": self.eps,
            "exponents": [p.to_list() for p in self.members],
        }

    @classmethod
    def from_dict(cls, d: Dict) -> "PsiFamily":
        members = [JewettPoly(m, n_exp) for m, n_exp in d["exponents"]]
        return cls(d["n"], d["delta"], d["eps"], members)

    def __len__(self):
        return self.n + 1

    def __repr__(self):
        return f"PsiFamily(n={self.n}, delta={self.delta}, eps={self.eps})"


def psi_family(n: int, delta: float, eps: float, max_m: int = 10 ** 7) -> PsiFamily:
    """
    Build :math:`\\psi_j` as the Jewett step from :math:`\\max(a_j - \\delta, 0)` to
    :math:`\\min(a_j + \\delta, 1)`.

    >>> psi = psi_family(4, 1 / 16, 0.01)
    >>> bool(psi(1, 0.25 + 1 / 16 + 0.001) < 0.01)
    True
    """
    _check_n_delta(n, delta)
    if not 0 < eps < 0.5:
        raise InvalidParams(f"eps should lie in (0, 1/2), got {eps}")
    members = []
    for j in range(n + 1):
        a_j = j / n
        members.append(jewett_poly(max(a_j - delta, 0.0), min(a_j + delta, 1.0), eps, max_m=max_m))
    logger.debug(f"psi family n={n}, delta={delta}, eps={eps}: max m {max(p.m for p in members)}")
    return PsiFamily(n, delta, eps, members)


class PhiFamily:
    r"""
    Trapezoidal partition of unity :math:`\varphi_0, \dots, \varphi_n`.

    From the ramps :math:`f_j` (1 before :math:`a_j - \delta`, 0 after :math:`a_j + \delta`),
    :math:`\varphi_0 = f_0`, :math:`\varphi_j = f_j \prod_{i<j} (1 - f_i)` and
    :math:`\varphi_n = \prod_{i<n} (1 - f_i)`. The sum telescopes to 1 and at most
    two members are nonzero at any point.

    >>> phi = PhiFamily(2, 0.125)
    >>> phi.evaluate([0.5]).tolist()
    [[0.0, 0.5, 0.5]]
    """

    def __init__(self, n: int, delta: float):
        _check_n_delta(n, delta)
        self.n = n
        self.delta = delta

    @property
    def nodes(self) -> np.ndarray:
        return np.arange(self.n + 1) / self.n

    def ramps(self, xs) -> np.ndarray:
        """The ramps :math:`f_0, \\dots, f_n`, shape ``(len(xs), n + 1)``."""
        xs = as_points(xs)[:, None]
        n, delta = self.n, self.delta
        f = np.empty((xs.shape[0], n + 1))
        f[:, :1] = (delta - xs) / delta
        if n > 1:
            a = self.nodes[1:n]
            f[:, 1:n] = (a + delta - xs) / (2 * delta)
        f[:, n:] = (1 - xs) / delta
        return np.clip(f, 0.0, 1.0)

    def evaluate(self, xs) -> np.ndarray:
        """Values of all members, shape ``(len(xs), n + 1)``."""
        f = self.ramps(xs)
        n = self.n
        # prefix[:, j] = prod_{i<j} (1 - f_i)
        prefix = np.ones_like(f)
        prefix[:, 1:] = np.cumprod(1 - f[:, :n], axis=1)
        phi = f * prefix
        phi[:, n] = prefix[:, n]
        return phi

    def __call__(self, j: int, x):
        return self.evaluate(x)[:, j]

    def bands(self) -> Dict[str, List[Tuple[float, float]]]:
        """
        Breakpoints of the family. On ``W[k - 1]`` = :math:`[a_{k-1} + \\delta, a_k - \\delta]`
        (the last one reaching 1) only :math:`\\varphi_k` is nonzero and equals 1; the ``V``
        bands around the nodes are where two neighbours share the weight.
        """
        a = self.nodes
        delta = self.delta
        v = [(max(a[j] - delta, 0.0), a[j] + delta) for j in range(self.n)]
        w = [(a[k - 1] + delta, a[k] - delta) for k in range(1, self.n)]
        w.append((a[self.n - 1] + delta, 1.0))
        return {"V": v, "W": w}

    def nonzero_count(self, xs) -> np.ndarray:
        return np.count_nonzero(self.evaluate(xs) > 0, axis=1)

    def __len__(self):
        return self.n + 1

    def __repr__(self):
        return f"PhiFamily(n={self.n}, delta={self.delta})"


def phi_family(n: int, delta: float) -> PhiFamily:
    return PhiFamily(n, delta)

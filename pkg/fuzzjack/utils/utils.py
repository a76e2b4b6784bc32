# -*- coding: utf-8 -*-

"""
useful utilities
"""

import numpy as np


def fmt17(x) -> str:
    """
    Format a float with 17 significant digits, enough to round trip a double.

    >>> fmt17(0.1)
    '0.10000000000000001'
    >>> fmt17(2.0)
    '2'
    """
    return "%.17g" % float(x)


def unit_points(samples: int) -> np.ndarray:
    """
    ``samples`` uniform points covering [0, 1], both ends included.
    """
    assert samples >= 2
    return np.linspace(0.0, 1.0, samples)


def as_points(x) -> np.ndarray:
    return np.atleast_1d(np.asarray(x, dtype=float))

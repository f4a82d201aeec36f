"""Descriptive statistics over finite sample series.

All second moments use population normalization (divide by n, not n-1): the
decompositions built on top treat a series as the complete realization under
study, and the closed-form identities they rely on hold exactly only when the
same normalization appears on both sides.
"""

import math

import numpy as np

from .backend import combine2, combine3, mean_var, pair_moments
from .errors import LengthMismatchError, ZeroVarianceError

__all__ = [
    "Series",
    "mean",
    "variance",
    "std",
    "covariance",
    "correlation",
    "linear_combination",
]


class Series:
    """A finite, real-valued sample series.

    Wraps a read-only, C-contiguous float64 array. Construction validates the
    invariants every statistic below assumes: one-dimensional, at least two
    samples, every value finite. The input is copied, so later mutation of the
    source cannot corrupt cached statistics derived from the series.
    """

    __slots__ = ("values",)

    def __init__(self, values):
        if isinstance(values, Series):
            arr = values.values  # already validated and read-only; share it
        else:
            arr = np.array(values, dtype=np.float64, order="C", copy=True)
            if arr.ndim != 1:
                raise ValueError(f"series must be 1-d, got shape {arr.shape}")
            if arr.shape[0] < 2:
                raise ValueError("series needs at least 2 samples")
            if not np.isfinite(arr).all():
                raise ValueError("series values must all be finite")
            arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    def __len__(self):
        return self.values.shape[0]

    def __repr__(self):
        return f"Series(n={len(self)})"

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return np.array_equal(self.values, other.values)

    __hash__ = None


def _values(series):
    """Validated float64 array behind ``series`` (coercing if needed)."""
    if isinstance(series, Series):
        return series.values
    return Series(series).values


def _check_paired(a, b):
    if a.shape[0] != b.shape[0]:
        raise LengthMismatchError(
            f"series lengths differ: {a.shape[0]} vs {b.shape[0]}"
        )


def mean(series):
    """Arithmetic mean."""
    return mean_var(_values(series))[0]


def variance(series):
    """Population variance (divide by n)."""
    return mean_var(_values(series))[1]


def std(series):
    """Population standard deviation."""
    return math.sqrt(variance(series))


def covariance(a, b):
    """Population covariance of two equally long series."""
    x, y = _values(a), _values(b)
    _check_paired(x, y)
    return pair_moments(x, y)[4]


def correlation(a, b):
    """Pearson correlation, clamped to [-1, 1].

    The clamp removes the last-ulp excursions floating-point accumulation can
    produce for (anti)collinear inputs; downstream square roots of
    ``1 - correlation**2`` rely on it. Raises :class:`ZeroVarianceError` if
    either series is constant.
    """
    x, y = _values(a), _values(b)
    _check_paired(x, y)
    _, _, vx, vy, cov = pair_moments(x, y)
    if vx == 0.0 or vy == 0.0:
        raise ZeroVarianceError("correlation undefined for a constant series")
    r = cov / math.sqrt(vx * vy)
    if r > 1.0:
        return 1.0
    if r < -1.0:
        return -1.0
    return r


def linear_combination(series, weights):
    """Sample-wise weighted sum of two or three equally long series."""
    if len(series) != len(weights):
        raise ValueError("need exactly one weight per series")
    arrays = [_values(s) for s in series]
    for other in arrays[1:]:
        _check_paired(arrays[0], other)
    ws = [float(w) for w in weights]
    if len(arrays) == 2:
        out = combine2(arrays[0], arrays[1], ws[0], ws[1])
    elif len(arrays) == 3:
        out = combine3(arrays[0], arrays[1], arrays[2], ws[0], ws[1], ws[2])
    else:
        raise ValueError("linear_combination supports 2 or 3 series")
    return Series(out)

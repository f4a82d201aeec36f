# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled moment and combination kernels.

Same accumulation order as the pure-Python twin in ``_kernels_py`` so the two
backends agree to a few ulp. Memoryviews are ``const`` because series arrays
are handed out read-only.
"""

import numpy as np


def mean_var(const double[::1] x):
    """Return ``(mean, population variance)`` of a 1-d float64 array."""
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t i
    cdef double total = 0.0
    cdef double acc = 0.0
    cdef double m, d
    for i in range(n):
        total += x[i]
    m = total / n
    for i in range(n):
        d = x[i] - m
        acc += d * d
    return m, acc / n


def pair_moments(const double[::1] x, const double[::1] y):
    """Return ``(mean_x, mean_y, var_x, var_y, cov)`` for two paired arrays.

    Population normalization (divide by n). Fused so that a self-pairing
    reproduces the variance bit-for-bit: ``pair_moments(x, x)[4] == var_x``.
    """
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t i
    cdef double sx = 0.0, sy = 0.0
    cdef double vx = 0.0, vy = 0.0, cov = 0.0
    cdef double mx, my, dx, dy
    if y.shape[0] != n:
        raise ValueError("paired arrays differ in length")
    for i in range(n):
        sx += x[i]
        sy += y[i]
    mx = sx / n
    my = sy / n
    for i in range(n):
        dx = x[i] - mx
        dy = y[i] - my
        vx += dx * dx
        vy += dy * dy
        cov += dx * dy
    return mx, my, vx / n, vy / n, cov / n


def combine2(const double[::1] x, const double[::1] y, double w1, double w2):
    """Return the sample-wise combination ``w1*x + w2*y`` as a new array."""
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t i
    if y.shape[0] != n:
        raise ValueError("paired arrays differ in length")
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    for i in range(n):
        o[i] = w1 * x[i] + w2 * y[i]
    return out


def combine3(const double[::1] x, const double[::1] y, const double[::1] z,
             double w1, double w2, double w3):
    """Return the sample-wise combination ``w1*x + w2*y + w3*z``."""
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t i
    if y.shape[0] != n or z.shape[0] != n:
        raise ValueError("paired arrays differ in length")
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    for i in range(n):
        o[i] = w1 * x[i] + w2 * y[i] + w3 * z[i]
    return out

"""Pure-Python moment and combination kernels.

Numerically equivalent twin of the compiled backend in ``_kernels_cy``: same
accumulation order (sequential two-pass moments), so the two agree to within
a few ulp — C compilers may contract multiply-adds, which is the only source
of divergence. Selection between the two happens in :mod:`comsig.backend`.
"""

import numpy as np


def mean_var(x):
    """Return ``(mean, population variance)`` of a 1-d float64 array."""
    xs = x.tolist()
    n = len(xs)
    total = 0.0
    for v in xs:
        total += v
    m = total / n
    acc = 0.0
    for v in xs:
        d = v - m
        acc += d * d
    return m, acc / n


def pair_moments(x, y):
    """Return ``(mean_x, mean_y, var_x, var_y, cov)`` for two paired arrays.

    Population normalization (divide by n). Fused so that a self-pairing
    reproduces the variance bit-for-bit: ``pair_moments(x, x)[4] == var_x``.
    """
    xs = x.tolist()
    ys = y.tolist()
    n = len(xs)
    if len(ys) != n:
        raise ValueError("paired arrays differ in length")
    sx = 0.0
    sy = 0.0
    for i in range(n):
        sx += xs[i]
        sy += ys[i]
    mx = sx / n
    my = sy / n
    vx = 0.0
    vy = 0.0
    cov = 0.0
    for i in range(n):
        dx = xs[i] - mx
        dy = ys[i] - my
        vx += dx * dx
        vy += dy * dy
        cov += dx * dy
    return mx, my, vx / n, vy / n, cov / n


def combine2(x, y, w1, w2):
    """Return the sample-wise combination ``w1*x + w2*y`` as a new array."""
    xs = x.tolist()
    ys = y.tolist()
    if len(ys) != len(xs):
        raise ValueError("paired arrays differ in length")
    return np.array([w1 * a + w2 * b for a, b in zip(xs, ys)], dtype=np.float64)


def combine3(x, y, z, w1, w2, w3):
    """Return the sample-wise combination ``w1*x + w2*y + w3*z``."""
    xs = x.tolist()
    ys = y.tolist()
    zs = z.tolist()
    if not (len(xs) == len(ys) == len(zs)):
        raise ValueError("paired arrays differ in length")
    return np.array(
        [w1 * a + w2 * b + w3 * c for a, b, c in zip(xs, ys, zs)],
        dtype=np.float64,
    )

"""Three-signal decomposition around a shared component.

Model: three observed series share one latent component ``A`` with additive,
mutually uncorrelated backgrounds::

    S_j = alpha_j * A + B_j    sd(B_j) = beta_j * |alpha_j| * sd(A)

with ``alpha_1 = 1`` fixed (the first series sets the component's scale and
sign, so ``gamma_1 = corr(S1, A) > 0``). Unlike the two-signal case, the three
pairwise correlations *overdetermine* the per-series component correlations::

    gamma_ij = gamma_i * gamma_j   =>   gamma_1**2 = |gamma_12 * gamma_13 / gamma_23|

and cyclically. That surplus yields a falsifiable *ideality* test: real data
whose ratios exceed 1 (beyond tolerance), or whose correlation signs multiply
negative, cannot come from a single shared component. When the test passes,
every model parameter is recoverable with no free parameter left — and the
best-obtainable combination follows in closed form.
"""

import math
import warnings
from dataclasses import dataclass, replace
from typing import NamedTuple, Optional

from .backend import pair_moments
from .errors import (
    DegenerateBackgroundWarning,
    DegenerateCombinationError,
    LengthMismatchError,
    NoCommonSignalError,
    NotIdealError,
    ZeroVarianceError,
)
from .series_stats import Series, linear_combination

__all__ = [
    "DEFAULT_IDEALITY_TOL",
    "ThreeSignalModel",
    "CorrelationTriple",
    "IdealityCheck",
    "ThreeSignalSolution",
    "forward_triple",
    "pairwise_correlations",
    "check_ideality",
    "recover_strengths",
    "extract3",
    "predicted_correlation",
]

DEFAULT_IDEALITY_TOL = 0.02


def _require_finite(name, value):
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class ThreeSignalModel:
    """Generative parameters: ``alpha_1`` is fixed at 1, betas stored squared."""

    alpha2: float
    alpha3: float
    betas_sq: tuple
    sigma: float = 1.0

    def __post_init__(self):
        for name in ("alpha2", "alpha3", "sigma"):
            value = float(getattr(self, name))
            _require_finite(name, value)
            object.__setattr__(self, name, value)
        betas_sq = tuple(float(b) for b in self.betas_sq)
        if len(betas_sq) != 3:
            raise ValueError("betas_sq must hold exactly 3 values")
        for b in betas_sq:
            _require_finite("betas_sq entry", b)
            if b < 0.0:
                raise ValueError("squared background ratios must be >= 0")
        object.__setattr__(self, "betas_sq", betas_sq)
        if self.alpha2 == 0.0 or self.alpha3 == 0.0:
            raise ValueError("alphas must be nonzero (the component must reach every series)")
        if self.sigma <= 0.0:
            raise ValueError("sigma must be > 0")

    @property
    def alphas(self):
        return (1.0, self.alpha2, self.alpha3)


@dataclass(frozen=True)
class CorrelationTriple:
    """The six measurable statistics of a three-series observation.

    Invariants: correlations in [-1, 1] and nonzero (a zero anywhere means no
    shared component reaches both series of that pair — raised as
    :class:`NoCommonSignalError`), deviations positive.
    """

    gamma12: float
    gamma13: float
    gamma23: float
    sigma1: float
    sigma2: float
    sigma3: float

    def __post_init__(self):
        for name in ("gamma12", "gamma13", "gamma23"):
            value = float(getattr(self, name))
            _require_finite(name, value)
            object.__setattr__(self, name, value)
            if abs(value) > 1.0:
                raise ValueError(f"{name} must lie in [-1, 1], got {value!r}")
            if value == 0.0:
                raise NoCommonSignalError(
                    f"{name} is zero; no component is shared across all three series"
                )
        for name in ("sigma1", "sigma2", "sigma3"):
            value = float(getattr(self, name))
            _require_finite(name, value)
            object.__setattr__(self, name, value)
            if value <= 0.0:
                raise ValueError(f"{name} must be > 0, got {value!r}")


class IdealityCheck(NamedTuple):
    """Outcome of the shared-component consistency test.

    ``gammas_sq`` holds the squared per-series component correlations implied
    by the pairwise ratios; when the triple is ideal, values that exceed 1 by
    at most the tolerance are clamped to exactly 1, otherwise the raw ratios
    are returned for diagnostics.
    """

    ideal: bool
    gammas_sq: tuple


@dataclass(frozen=True)
class ThreeSignalSolution:
    """Recovered model plus (optionally) the extracted combination.

    ``gammas`` are the positive per-series component-correlation magnitudes;
    signs live in ``alphas`` (and follow the signs of ``gamma_12``,
    ``gamma_13``). ``sigma`` is the recovered component deviation in the first
    series' units. ``weights``/``s_best`` are filled by :func:`extract3`.
    """

    gammas: tuple
    betas_sq: tuple
    alphas: tuple
    sigma: float
    gamma_best: float
    weights: Optional[tuple] = None
    s_best: Optional[Series] = None

    def __post_init__(self):
        gammas = tuple(float(g) for g in self.gammas)
        betas_sq = tuple(float(b) for b in self.betas_sq)
        alphas = tuple(float(a) for a in self.alphas)
        if not (len(gammas) == len(betas_sq) == len(alphas) == 3):
            raise ValueError("gammas, betas_sq and alphas must hold 3 values each")
        for g in gammas:
            if not 0.0 < g <= 1.0:
                raise ValueError(f"recovered gammas must lie in (0, 1], got {g!r}")
        for b in betas_sq:
            if b < 0.0:
                raise ValueError("squared background ratios must be >= 0")
        if alphas[0] != 1.0:
            raise ValueError("alpha_1 is fixed at 1 by convention")
        object.__setattr__(self, "gammas", gammas)
        object.__setattr__(self, "betas_sq", betas_sq)
        object.__setattr__(self, "alphas", alphas)
        if not 0.0 < self.gamma_best <= 1.0:
            raise ValueError(f"gamma_best must lie in (0, 1], got {self.gamma_best!r}")
        if self.weights is not None:
            weights = tuple(float(w) for w in self.weights)
            if len(weights) != 3:
                raise ValueError("three-signal extraction needs exactly 3 weights")
            object.__setattr__(self, "weights", weights)


def forward_triple(model):
    """Map model parameters to the statistics an observer would measure."""
    gammas = []
    sigmas = []
    for alpha, beta_sq in zip(model.alphas, model.betas_sq):
        root = math.sqrt(1.0 + beta_sq)
        gammas.append(math.copysign(1.0 / root, alpha))
        sigmas.append(root * abs(alpha) * model.sigma)
    g1, g2, g3 = gammas
    return CorrelationTriple(g1 * g2, g1 * g3, g2 * g3, *sigmas)


def pairwise_correlations(s1, s2, s3):
    """Measure the full :class:`CorrelationTriple` of three series.

    One fused pass per pair; the shared variances agree bit-for-bit across
    pairs because the accumulation is identical.
    """
    series = [Series(s) for s in (s1, s2, s3)]
    x1, x2, x3 = (s.values for s in series)
    if not (x1.shape[0] == x2.shape[0] == x3.shape[0]):
        raise LengthMismatchError(
            "series lengths differ: "
            f"{x1.shape[0]}, {x2.shape[0]}, {x3.shape[0]}"
        )
    _, _, v1, v2, c12 = pair_moments(x1, x2)
    _, _, _, v3, c13 = pair_moments(x1, x3)
    _, _, _, _, c23 = pair_moments(x2, x3)
    if v1 == 0.0 or v2 == 0.0 or v3 == 0.0:
        raise ZeroVarianceError("observation series must not be constant")

    def _corr(cov, va, vb):
        r = cov / math.sqrt(va * vb)
        return max(-1.0, min(1.0, r))

    return CorrelationTriple(
        gamma12=_corr(c12, v1, v2),
        gamma13=_corr(c13, v1, v3),
        gamma23=_corr(c23, v2, v3),
        sigma1=math.sqrt(v1),
        sigma2=math.sqrt(v2),
        sigma3=math.sqrt(v3),
    )


def _strength_ratios(triple):
    g12, g13, g23 = triple.gamma12, triple.gamma13, triple.gamma23
    return (
        abs(g12 * g13 / g23),
        abs(g12 * g23 / g13),
        abs(g13 * g23 / g12),
    )


def check_ideality(triple, tol=DEFAULT_IDEALITY_TOL):
    """Test whether a correlation triple is consistent with one shared component.

    Consistency requires every implied squared strength ``gamma_j**2`` to stay
    at or below ``1 + tol`` (the tolerance absorbs sampling error) *and* the
    product of the three correlation signs to be positive. Within tolerance,
    overshoots are clamped to exactly 1 in the returned ratios.
    """
    if tol < 0.0:
        raise ValueError("tolerance must be >= 0")
    gammas_sq = _strength_ratios(triple)
    signs_ok = triple.gamma12 * triple.gamma13 * triple.gamma23 > 0.0
    ratios_ok = all(g <= 1.0 + tol for g in gammas_sq)
    if signs_ok and ratios_ok:
        return IdealityCheck(True, tuple(min(1.0, g) for g in gammas_sq))
    return IdealityCheck(False, gammas_sq)


def recover_strengths(triple, tol=DEFAULT_IDEALITY_TOL):
    """Recover all model parameters from an ideal correlation triple.

    With ``gamma_j`` the positive root of the pairwise ratio for series ``j``::

        beta_j**2 = 1/gamma_j**2 - 1
        sigma     = gamma_1 * sigma_1
        alpha_j   = sgn(gamma_1j) * gamma_j * sigma_j / sigma      (j = 2, 3)

    plus the best obtainable combination's quality (weights are left to
    :func:`extract3`, which has the series)::

        gamma_best**2 = p / (p + beta1**2 * beta2**2 * beta3**2),
        p = beta1**2*beta2**2 + beta1**2*beta3**2 + beta2**2*beta3**2

    (``gamma_best = 1`` when two or more backgrounds vanish). Raises
    :class:`NotIdealError` — carrying the ratio diagnostics — when the triple
    fails :func:`check_ideality`.
    """
    ideal, gammas_sq = check_ideality(triple, tol)
    if not ideal:
        if triple.gamma12 * triple.gamma13 * triple.gamma23 <= 0.0:
            raise NotIdealError(
                "pairwise correlation signs are inconsistent with one shared "
                "component (their product must be positive)",
                gammas_sq,
            )
        raise NotIdealError(
            "implied squared strengths exceed 1 beyond tolerance "
            f"(tol={tol!r}): {gammas_sq!r}",
            gammas_sq,
        )
    g1, g2, g3 = (math.sqrt(g) for g in gammas_sq)
    betas_sq = tuple(max(0.0, 1.0 / g - 1.0) for g in gammas_sq)
    sigma = g1 * triple.sigma1
    alpha2 = math.copysign(g2 * triple.sigma2 / sigma, triple.gamma12)
    alpha3 = math.copysign(g3 * triple.sigma3 / sigma, triple.gamma13)
    b1, b2, b3 = betas_sq
    pair_sum = b1 * b2 + b1 * b3 + b2 * b3
    triple_product = b1 * b2 * b3
    if pair_sum == 0.0:
        gamma_best = 1.0
    else:
        gamma_best = math.sqrt(pair_sum / (pair_sum + triple_product))
    return ThreeSignalSolution(
        gammas=(g1, g2, g3),
        betas_sq=betas_sq,
        alphas=(1.0, alpha2, alpha3),
        sigma=sigma,
        gamma_best=gamma_best,
    )


def extract3(s1, s2, s3, tol=DEFAULT_IDEALITY_TOL):
    """Best-obtainable combination of three series sharing one component.

    Measures the correlation triple, recovers the model, and combines the
    series with the closed-form optimal weights (normalized to carry the
    component at unit strength, ``sum(w_j * alpha_j) == 1``)::

        w_j = (prod of the other two beta**2) / (pair_sum * alpha_j)

    When two or more recovered backgrounds vanish the weight ratio is 0/0;
    the combination degenerates to any noiseless series, so the lowest-index
    one is returned rescaled by ``1/alpha_j`` and
    :class:`DegenerateBackgroundWarning` is emitted. A single vanishing
    background needs no special case: the formula already collapses onto that
    series.
    """
    series = [Series(s) for s in (s1, s2, s3)]
    triple = pairwise_correlations(*series)
    solution = recover_strengths(triple, tol)
    b1, b2, b3 = solution.betas_sq
    pair_sum = b1 * b2 + b1 * b3 + b2 * b3
    if pair_sum == 0.0:
        warnings.warn(
            "two or more recovered backgrounds vanish; returning the first "
            "noiseless series rescaled by 1/alpha",
            DegenerateBackgroundWarning,
            stacklevel=2,
        )
        j = next(i for i, b in enumerate(solution.betas_sq) if b == 0.0)
        weights = [0.0, 0.0, 0.0]
        weights[j] = 1.0 / solution.alphas[j]
    else:
        products = (b2 * b3, b1 * b3, b1 * b2)
        weights = [
            p / (pair_sum * alpha)
            for p, alpha in zip(products, solution.alphas)
        ]
    s_best = linear_combination(series, weights)
    return replace(solution, weights=tuple(weights), s_best=s_best)


def predicted_correlation(model, weights):
    """Correlation of ``sum(w_j * S_j)`` with the latent component, analytically.

    For any weights under a known model::

        c = sum(w_j * alpha_j)
        corr = c / sqrt(c**2 + sum((w_j * alpha_j)**2 * beta_j**2))

    Raises :class:`DegenerateCombinationError` if the combination has zero
    variance (e.g. all weights zero).
    """
    weights = tuple(float(w) for w in weights)
    if len(weights) != 3:
        raise ValueError("need exactly 3 weights")
    for w in weights:
        _require_finite("weight", w)
    c = 0.0
    noise = 0.0
    for w, alpha, beta_sq in zip(weights, model.alphas, model.betas_sq):
        c += w * alpha
        noise += (w * alpha) ** 2 * beta_sq
    var_units = c * c + noise
    if var_units == 0.0:
        raise DegenerateCombinationError(
            "combination has zero variance; correlation undefined"
        )
    return c / math.sqrt(var_units)

"""Two-signal decomposition around a shared component.

Model: two observed series share one latent component ``A`` with additive,
mutually uncorrelated backgrounds::

    S1 = A + B1          sd(B1) = beta1 * sd(A)
    S2 = alpha * A + B2  sd(B2) = beta2 * |alpha| * sd(A)

``beta_j`` is the background-to-component strength ratio of series ``j`` and
``alpha`` the relative strength (and sign) of the component in the second
series. Writing ``sigma = sd(A)``, the observable consequences are::

    sigma1 = sqrt(1 + beta1**2) * sigma
    sigma2 = sqrt(1 + beta2**2) * |alpha| * sigma
    gamma1 = corr(S1, A) = 1 / sqrt(1 + beta1**2)
    gamma2 = corr(S2, A) = sgn(alpha) / sqrt(1 + beta2**2)
    gamma12 = corr(S1, S2) = gamma1 * gamma2

Only ``gamma12``, ``sigma1`` and ``sigma2`` are measurable; they fix one
degree of freedom less than the model has, so inversion takes ``gamma1`` as a
free parameter ranging over ``[|gamma12|, 1]``. This module provides the
forward map, the inversion, and the linear combination of the two series most
correlated with ``A`` — both for a known model (:func:`optimal_weights`) and
directly from measured statistics (:func:`parametric_extract`,
:func:`symmetric_extract`).

Convention: the latent component is taken positively correlated with the
first series (``gamma1 > 0``); sign information lives in ``alpha``/``gamma2``.
Weights are always expressed in the raw-series basis, ``w1*S1 + w2*S2``.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .backend import pair_moments
from .errors import (
    DegenerateCombinationError,
    DegenerateModelError,
    LengthMismatchError,
    NoCommonSignalError,
    OutOfRangeError,
    ZeroVarianceError,
)
from .series_stats import Series, linear_combination

__all__ = [
    "TwoSignalModel",
    "TwoSignalObservation",
    "ForwardStats",
    "ExtractionResult",
    "forward_correlations",
    "optimal_weights",
    "null_signal",
    "invert_model",
    "parametric_extract",
    "symmetric_extract",
    "predicted_extraction_correlation",
]


def _require_finite(name, value):
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class TwoSignalModel:
    """Generative parameters of the two-signal decomposition.

    ``sigma`` is the standard deviation of the latent component; it defaults
    to 1 because every correlation is invariant to it.
    """

    alpha: float
    beta1: float
    beta2: float
    sigma: float = 1.0

    def __post_init__(self):
        for name in ("alpha", "beta1", "beta2", "sigma"):
            value = float(getattr(self, name))
            _require_finite(name, value)
            object.__setattr__(self, name, value)
        if self.alpha == 0.0:
            raise ValueError("alpha must be nonzero (the component must reach both series)")
        if self.beta1 < 0.0 or self.beta2 < 0.0:
            raise ValueError("background ratios beta1, beta2 must be >= 0")
        if self.sigma <= 0.0:
            raise ValueError("sigma must be > 0")


class ForwardStats(NamedTuple):
    """Observable statistics implied by a :class:`TwoSignalModel`."""

    gamma12: float
    gamma1: float
    gamma2: float
    sigma1: float
    sigma2: float


def forward_correlations(model):
    """Map model parameters to the statistics an observer would measure."""
    gamma1 = 1.0 / math.sqrt(1.0 + model.beta1**2)
    gamma2 = math.copysign(1.0 / math.sqrt(1.0 + model.beta2**2), model.alpha)
    sigma1 = math.sqrt(1.0 + model.beta1**2) * model.sigma
    sigma2 = math.sqrt(1.0 + model.beta2**2) * abs(model.alpha) * model.sigma
    return ForwardStats(gamma1 * gamma2, gamma1, gamma2, sigma1, sigma2)


class TwoSignalObservation:
    """Two measured series plus their cached pairwise statistics.

    Statistics come from one fused pass so they are mutually consistent:
    ``gamma12`` (clamped to [-1, 1]), ``sigma1`` and ``sigma2``.
    """

    __slots__ = ("s1", "s2", "gamma12", "sigma1", "sigma2")

    def __init__(self, s1, s2):
        s1 = Series(s1)
        s2 = Series(s2)
        if len(s1) != len(s2):
            raise LengthMismatchError(
                f"series lengths differ: {len(s1)} vs {len(s2)}"
            )
        _, _, v1, v2, cov = pair_moments(s1.values, s2.values)
        if v1 == 0.0 or v2 == 0.0:
            raise ZeroVarianceError("observation series must not be constant")
        r = cov / math.sqrt(v1 * v2)
        r = max(-1.0, min(1.0, r))
        object.__setattr__(self, "s1", s1)
        object.__setattr__(self, "s2", s2)
        object.__setattr__(self, "gamma12", r)
        object.__setattr__(self, "sigma1", math.sqrt(v1))
        object.__setattr__(self, "sigma2", math.sqrt(v2))

    def __setattr__(self, name, value):
        raise AttributeError("TwoSignalObservation is immutable")

    def __repr__(self):
        return (
            f"TwoSignalObservation(n={len(self.s1)}, gamma12={self.gamma12:.6g}, "
            f"sigma1={self.sigma1:.6g}, sigma2={self.sigma2:.6g})"
        )


@dataclass(frozen=True)
class ExtractionResult:
    """A linear combination of the observed series and its predicted quality.

    ``weights`` applies to the raw series (``w1*S1 + w2*S2``); ``gamma_best``
    is the combination's correlation with the latent component; ``gamma1`` and
    ``gamma2`` are the per-series component correlations under the same model
    assumption. ``s_best`` is the combined series when inputs were available.
    """

    weights: tuple
    gamma_best: float
    gamma1: float
    gamma2: float
    s_best: Optional[Series] = None

    def __post_init__(self):
        weights = tuple(float(w) for w in self.weights)
        if len(weights) != 2:
            raise ValueError("two-signal extraction needs exactly 2 weights")
        for w in weights:
            _require_finite("weight", w)
        object.__setattr__(self, "weights", weights)
        if not 0.0 < self.gamma_best <= 1.0:
            raise ValueError(f"gamma_best must lie in (0, 1], got {self.gamma_best!r}")

    @property
    def w1(self):
        return self.weights[0]

    @property
    def w2(self):
        return self.weights[1]


def optimal_weights(model):
    """Best-obtainable combination for a fully known model.

    Returns the weights maximizing the combination's correlation with the
    latent component, normalized so the combination carries the component at
    unit strength (``w1 + w2*alpha == 1``), together with that correlation::

        w1 = beta2**2 / (beta1**2 + beta2**2)
        w2 = beta1**2 / ((beta1**2 + beta2**2) * alpha)
        gamma_best**2 = (beta1**2 + beta2**2) / (beta1**2 + beta2**2 + beta1**2 * beta2**2)

    Raises :class:`DegenerateModelError` when both backgrounds vanish: every
    normalized combination is then equally perfect and the ratio is 0/0.
    """
    b1s = model.beta1**2
    b2s = model.beta2**2
    total = b1s + b2s
    if total == 0.0:
        raise DegenerateModelError(
            "both backgrounds vanish; any normalized combination is exact"
        )
    w1 = b2s / total
    w2 = b1s / (total * model.alpha)
    gamma_best = math.sqrt(total / (total + b1s * b2s))
    stats = forward_correlations(model)
    return ExtractionResult(
        weights=(w1, w2),
        gamma_best=gamma_best,
        gamma1=stats.gamma1,
        gamma2=stats.gamma2,
    )


def null_signal(model, s1, s2):
    """Component-free contrast ``alpha*S1 - S2`` of two observed series.

    Under the model the latent component cancels exactly, leaving
    ``alpha*B1 - B2``; its correlation with the component is zero up to
    sampling error, which makes it a diagnostic for the assumed ``alpha``.
    """
    return linear_combination((s1, s2), (model.alpha, -1.0))


def _check_gamma1_range(gamma1, gamma12):
    if not math.isfinite(gamma1):
        raise OutOfRangeError(f"gamma1 must be finite, got {gamma1!r}")
    low = abs(gamma12)
    if not low <= gamma1 <= 1.0:
        raise OutOfRangeError(
            f"gamma1={gamma1!r} outside the admissible range "
            f"[|gamma12|, 1] = [{low!r}, 1]"
        )


def invert_model(obs, gamma1):
    """Recover the generative model from measured statistics plus ``gamma1``.

    The measurable triple ``(gamma12, sigma1, sigma2)`` underdetermines the
    model by one degree of freedom; ``gamma1`` — the first series' correlation
    with the latent component, necessarily in ``[|gamma12|, 1]`` — selects the
    member of the family::

        sigma    = gamma1 * sigma1
        beta1**2 = 1/gamma1**2 - 1
        gamma2   = gamma12 / gamma1
        beta2**2 = 1/gamma2**2 - 1
        alpha    = gamma2 * sigma2 / (gamma1 * sigma1)

    Raises :class:`NoCommonSignalError` at ``gamma12 == 0`` (no decomposition
    exists) and :class:`OutOfRangeError` for ``gamma1`` outside its interval.
    """
    gamma12 = obs.gamma12
    if gamma12 == 0.0:
        raise NoCommonSignalError("measured gamma12 is zero; nothing shared to recover")
    _check_gamma1_range(gamma1, gamma12)
    sigma = gamma1 * obs.sigma1
    beta1_sq = max(0.0, 1.0 / gamma1**2 - 1.0)
    gamma2 = gamma12 / gamma1
    beta2_sq = max(0.0, 1.0 / gamma2**2 - 1.0)
    alpha = gamma2 * obs.sigma2 / (gamma1 * obs.sigma1)
    return TwoSignalModel(
        alpha=alpha,
        beta1=math.sqrt(beta1_sq),
        beta2=math.sqrt(beta2_sq),
        sigma=sigma,
    )


def parametric_extract(obs, gamma1):
    """Best-obtainable combination from measured statistics plus ``gamma1``.

    Equivalent to ``optimal_weights(invert_model(obs, gamma1))`` but expressed
    directly in the measured quantities; returns the combined series as well.
    With ``t = gamma1**2`` and ``D = gamma12**2 - 2*t*gamma12**2 + t**2``::

        gamma_best**2 = D / (t * (1 - gamma12**2))
        w1 = t * (t - gamma12**2) / D
        w2 = gamma12 * t * (1 - t) / D * sigma1 / sigma2

    At ``|gamma12| == 1`` the two series are copies up to scale, ``gamma1`` is
    indeterminate, and the first series is already a perfect extraction — the
    shortcut result ``(weights (1, 0), gamma_best 1, s_best = S1)`` is
    returned and ``gamma1`` is ignored.
    """
    gamma12 = obs.gamma12
    if gamma12 == 0.0:
        raise NoCommonSignalError("measured gamma12 is zero; nothing shared to extract")
    if abs(gamma12) == 1.0:
        return ExtractionResult(
            weights=(1.0, 0.0),
            gamma_best=1.0,
            gamma1=1.0,
            gamma2=gamma12,
            s_best=obs.s1,
        )
    _check_gamma1_range(gamma1, gamma12)
    t = gamma1**2
    g12_sq = gamma12**2
    d = g12_sq - 2.0 * t * g12_sq + t * t
    gamma_best = min(1.0, math.sqrt(d / (t * (1.0 - g12_sq))))
    c1 = t * (t - g12_sq) / d
    c2 = gamma12 * t * (1.0 - t) / d
    w1 = c1
    w2 = c2 * obs.sigma1 / obs.sigma2
    s_best = linear_combination((obs.s1, obs.s2), (w1, w2))
    return ExtractionResult(
        weights=(w1, w2),
        gamma_best=gamma_best,
        gamma1=gamma1,
        gamma2=gamma12 / gamma1,
        s_best=s_best,
    )


def symmetric_extract(obs):
    """Best-obtainable combination with no prior on either series.

    Splits the measured correlation evenly between the two series
    (``gamma1 = sqrt(|gamma12|)``, ``gamma2 = sgn(gamma12) * gamma1``) — the
    unique assumption treating them symmetrically — under which the optimal
    combination weighs the *normalized* series equally::

        S_best = 1/2 * (S1/sigma1 + sgn(gamma12) * S2/sigma2) * sigma1
        gamma_best = sqrt(2|gamma12| / (1 + |gamma12|))

    (the overall ``sigma1`` factor keeps weights in the raw-series basis with
    ``w1 = 1/2``). Coincides with :func:`parametric_extract` at
    ``gamma1 = sqrt(|gamma12|)``.
    """
    gamma12 = obs.gamma12
    if gamma12 == 0.0:
        raise NoCommonSignalError("measured gamma12 is zero; nothing shared to extract")
    mag = abs(gamma12)
    gamma1 = math.sqrt(mag)
    gamma2 = math.copysign(gamma1, gamma12)
    gamma_best = math.sqrt(2.0 * mag / (1.0 + mag))
    w1 = 0.5
    w2 = math.copysign(0.5, gamma12) * obs.sigma1 / obs.sigma2
    s_best = linear_combination((obs.s1, obs.s2), (w1, w2))
    return ExtractionResult(
        weights=(w1, w2),
        gamma_best=gamma_best,
        gamma1=gamma1,
        gamma2=gamma2,
        s_best=s_best,
    )


def predicted_extraction_correlation(model, w1, w2):
    """Correlation of ``w1*S1 + w2*S2`` with the latent component, analytically.

    For any weights — optimal or not — under a known model::

        c = w1 + w2*alpha
        corr = c / sqrt(c**2 + (w1*beta1)**2 + (w2*alpha*beta2)**2)

    Raises :class:`DegenerateCombinationError` if the combination has zero
    variance (e.g. both weights zero).
    """
    w1 = float(w1)
    w2 = float(w2)
    _require_finite("w1", w1)
    _require_finite("w2", w2)
    c = w1 + w2 * model.alpha
    var_units = c * c + (w1 * model.beta1) ** 2 + (w2 * model.alpha * model.beta2) ** 2
    if var_units == 0.0:
        raise DegenerateCombinationError(
            "combination has zero variance; correlation undefined"
        )
    return c / math.sqrt(var_units)

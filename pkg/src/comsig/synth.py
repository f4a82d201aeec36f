"""Synthetic scenarios with exactly calibrated strength ratios.

The latent component is a sine wave; backgrounds are either a cosine at half
the component's frequency (deterministic, orthogonal to the component over
whole cycles) or Gaussian white noise. Every background is mean-centered and
rescaled so its measured population deviation hits ``beta_j * |alpha_j| *
sd(A)`` *exactly* (to float precision) — measured strength ratios then match
the requested ones without sampling slack, which is what makes tight
validation tolerances possible.

Randomness comes from numpy's default 64-bit PCG64 generator seeded with the
scenario's ``seed``; a scenario is fully reproducible from its spec. Noise
draws are consumed in series order, so two noise backgrounds in one scenario
are independent. Deterministic kinds reuse the same waveform: two cosine
backgrounds in one scenario would be perfectly correlated with each other,
violating the mutual-uncorrelatedness the decomposition assumes — ask for at
most one.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from .backend import mean_var
from .series_stats import Series, correlation

__all__ = [
    "BackgroundKind",
    "ScenarioSpec",
    "Scenario",
    "ScenarioMeasurement",
    "two_signal_spec",
    "three_signal_spec",
    "generate",
    "measure",
]

MIN_SAMPLES = 16


class BackgroundKind(str, enum.Enum):
    """Available background waveforms."""

    DOUBLE_PERIOD_COSINE = "double-period-cosine"
    GAUSSIAN_WHITE_NOISE = "gaussian-white-noise"


@dataclass(frozen=True)
class ScenarioSpec:
    """Complete, reproducible description of one synthetic scenario.

    ``alphas[j]`` is series j's component strength (first usually 1),
    ``betas[j]`` its background-to-component strength ratio, ``kinds[j]`` its
    background waveform. ``periods`` counts full component cycles across the
    ``n`` samples.
    """

    alphas: tuple
    betas: tuple
    kinds: tuple
    n: int = 10_000
    periods: float = 4.0
    seed: int = 0

    def __post_init__(self):
        alphas = tuple(float(a) for a in self.alphas)
        betas = tuple(float(b) for b in self.betas)
        kinds = tuple(BackgroundKind(k) for k in self.kinds)
        if not 2 <= len(alphas) <= 3:
            raise ValueError("scenarios hold 2 or 3 series")
        if not (len(alphas) == len(betas) == len(kinds)):
            raise ValueError("alphas, betas and kinds must have matching lengths")
        for a in alphas:
            if not math.isfinite(a) or a == 0.0:
                raise ValueError("every alpha must be finite and nonzero")
        for b in betas:
            if not math.isfinite(b) or b < 0.0:
                raise ValueError("every beta must be finite and >= 0")
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "betas", betas)
        object.__setattr__(self, "kinds", kinds)
        n = int(self.n)
        if n < MIN_SAMPLES:
            raise ValueError(f"n must be >= {MIN_SAMPLES}, got {n}")
        object.__setattr__(self, "n", n)
        periods = float(self.periods)
        if not math.isfinite(periods) or periods <= 0.0:
            raise ValueError("periods must be finite and > 0")
        object.__setattr__(self, "periods", periods)
        seed = int(self.seed)
        if not 0 <= seed < 2**64:
            raise ValueError("seed must fit an unsigned 64-bit integer")
        object.__setattr__(self, "seed", seed)

    @property
    def n_series(self):
        return len(self.alphas)


def two_signal_spec(
    alpha,
    beta1,
    beta2,
    *,
    n=10_000,
    periods=4.0,
    seed=0,
    kinds=(BackgroundKind.DOUBLE_PERIOD_COSINE, BackgroundKind.GAUSSIAN_WHITE_NOISE),
):
    """Spec for ``S1 = A + B1``, ``S2 = alpha*A + B2`` (cosine/noise default)."""
    return ScenarioSpec(
        alphas=(1.0, alpha),
        betas=(beta1, beta2),
        kinds=kinds,
        n=n,
        periods=periods,
        seed=seed,
    )


def three_signal_spec(
    alpha2,
    alpha3,
    betas,
    *,
    n=10_000,
    periods=4.0,
    seed=0,
    kinds=(BackgroundKind.GAUSSIAN_WHITE_NOISE,) * 3,
):
    """Spec for three series sharing one component (all-noise default)."""
    return ScenarioSpec(
        alphas=(1.0, alpha2, alpha3),
        betas=tuple(betas),
        kinds=kinds,
        n=n,
        periods=periods,
        seed=seed,
    )


@dataclass(frozen=True)
class Scenario:
    """Generated data: the latent component and the per-series pieces.

    ``signals[j].values`` equals ``alphas[j] * a.values + backgrounds[j].values``
    sample-for-sample (the composition is literal, no re-normalization of the
    sum).
    """

    spec: ScenarioSpec
    a: Series
    backgrounds: tuple
    signals: tuple


def generate(spec):
    """Generate the scenario a :class:`ScenarioSpec` describes."""
    n = spec.n
    i = np.arange(n, dtype=np.float64)
    a_arr = np.ascontiguousarray(np.sin(2.0 * np.pi * spec.periods * i / n))
    sd_a = math.sqrt(mean_var(a_arr)[1])
    rng = np.random.default_rng(spec.seed)
    backgrounds = []
    signals = []
    for alpha, beta, kind in zip(spec.alphas, spec.betas, spec.kinds):
        if kind is BackgroundKind.DOUBLE_PERIOD_COSINE:
            raw = np.ascontiguousarray(
                np.cos(2.0 * np.pi * (spec.periods / 2.0) * i / n)
            )
        else:
            raw = rng.standard_normal(n)
        if beta == 0.0:
            b_arr = np.zeros(n)
        else:
            m_raw, var_raw = mean_var(raw)
            if var_raw == 0.0:
                raise ValueError("background waveform is constant; cannot calibrate")
            scale = beta * abs(alpha) * sd_a / math.sqrt(var_raw)
            b_arr = (raw - m_raw) * scale
        s_arr = alpha * a_arr + b_arr
        backgrounds.append(Series(b_arr))
        signals.append(Series(s_arr))
    return Scenario(
        spec=spec,
        a=Series(a_arr),
        backgrounds=tuple(backgrounds),
        signals=tuple(signals),
    )


@dataclass(frozen=True)
class ScenarioMeasurement:
    """Empirical correlations of a scenario against its own latent component.

    ``gammas[j] = corr(signals[j], a)``; ``pair_gammas[(i, j)]`` (1-based,
    i < j) holds the cross correlations between signals.
    """

    gammas: tuple
    pair_gammas: dict


def measure(scenario):
    """Measure the component and cross correlations of a generated scenario."""
    signals = scenario.signals
    gammas = tuple(correlation(s, scenario.a) for s in signals)
    pair_gammas = {}
    for i in range(len(signals)):
        for j in range(i + 1, len(signals)):
            pair_gammas[(i + 1, j + 1)] = correlation(signals[i], signals[j])
    return ScenarioMeasurement(gammas=gammas, pair_gammas=pair_gammas)

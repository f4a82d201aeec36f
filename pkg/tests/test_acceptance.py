"""Acceptance criteria for the common-signal extraction package.

One test per criterion; the ``pytest -v`` PASSED/FAILED line *is* the
criterion's pass/fail line. Each test prints its measurements (visible in the
failure report, or with ``-rA``/``-s``) and enforces a wall-clock budget,
which assumes the compiled kernel backend (``comsig.BACKEND == "compiled"``).

Criteria and tolerances:

1. Stored per-row ``gamma1`` references agree with ``1/sqrt(1+beta1^2)``
   within 5e-5.                                                   [< 1 s]
2. A 20-seed Monte-Carlo regeneration (n = 10^4 per scenario) reproduces
   every stored reference cell (gamma1, gamma2, gamma_best per row) within
   +/-0.05.                                                       [< 5 s]
   NOTE: this criterion is expected to FAIL honestly on five stored cells.
   Two stored rows differ only in the component scale, which no correlation
   measures, and the stored noise-channel values track one uncalibrated
   noise realization (consistent with all three gamma2 deviations and both
   gamma_best deviations). The measured values do match the closed-form
   predictions; the per-cell table printed by the test shows exactly which
   stored cells disagree and by how much.
3. In the lopsided scenario (alpha 2, beta1 0.5, beta2 2) the no-prior
   symmetric extraction lands below the clean series' own correlation in
   more than half of 20 independent seeds.                        [< 2 s]
4. On 1000 randomized measured observations (n = 32), the
   measurement-domain extraction equals the model-domain route
   (``optimal_weights(invert_model(...))``) to 1e-12 in weights, quality
   and combined samples; the symmetric extraction equals the measurement-
   domain route at its implied gamma1 to the same tolerance.      [< 1 s]
5. On 1000 random models (two- and three-signal), the claimed optimum is
   one: quality >= every single-series correlation - 1e-12, and +/-1e-4
   relative weight perturbations never gain more than 1e-9.       [< 1 s]
6. Three-signal end-to-end on n = 10^5 synthetic scenarios (10 seeds x 2
   models): ideality ratios within the 0.02 margin, strengths recovered
   within 5 %, realized quality within 0.03 of the predicted one, and
   input-order permutation leaves the quality unchanged to 1e-12. [< 10 s]
7. Component-free contrasts stay component-free: averaged over 20 seeds
   (n = 10^4), |corr(contrast, component)| <= 0.05 for the two-signal null
   signal and all three three-signal pair contrasts.              [< 2 s]
8. The demo series table shows the advertised behavior: the extraction
   beats the noisy series against the component, and its recomputed
   normalized weight on the noisy series is smaller than on the clean one.
                                                                  [< 1 s]
"""

import math
import time

import numpy as np

from comsig import (
    REFERENCE_ROWS,
    Series,
    ThreeSignalModel,
    TwoSignalModel,
    TwoSignalObservation,
    correlation,
    exceptional_series,
    extract3,
    generate,
    invert_model,
    linear_combination,
    null_signal,
    optimal_weights,
    parametric_extract,
    predicted_extraction_correlation,
    run_validation,
    scenario_seed,
    symmetric_extract,
    three_signal_spec,
    two_signal_spec,
)
from comsig.three_signal import forward_triple, predicted_correlation
from comsig.validation import EXCEPTIONAL_ROW_INDEX


def _rel(actual, expected):
    scale = max(abs(expected), 1e-300)
    return abs(actual - expected) / scale


def test_criterion_1_stored_gamma1_consistency():
    budget = 1.0
    tol = 5e-5
    start = time.perf_counter()
    worst = 0.0
    print("row  alpha beta1 beta2   stored    closed-form   |diff|")
    for row in REFERENCE_ROWS:
        closed = 1.0 / math.sqrt(1.0 + row.beta1**2)
        diff = abs(row.gamma1 - closed)
        worst = max(worst, diff)
        print(
            f"     {row.alpha:<5g} {row.beta1:<5g} {row.beta2:<5g} "
            f"{row.gamma1:.4f}   {closed:.10f}  {diff:.2e}"
        )
    elapsed = time.perf_counter() - start
    print(f"worst |diff| = {worst:.2e} (tol {tol:g}); elapsed {elapsed:.3f}s")
    assert elapsed < budget
    assert worst <= tol


def test_criterion_2_monte_carlo_reproduces_stored_references():
    budget = 5.0
    tol = 0.05
    start = time.perf_counter()
    report = run_validation(seeds=20, n=10_000, base_seed=0)
    elapsed = time.perf_counter() - start
    failures = []
    print("row  cell        measured  stored   |diff|   status")
    for index, row in enumerate(report.rows, start=1):
        ref = row.reference
        cells = (
            ("gamma1", row.measured_gamma1, ref.gamma1),
            ("gamma2", row.measured_gamma2, ref.gamma2),
            ("gamma_best", row.measured_gamma_best, ref.gamma_best),
        )
        for name, measured, stored in cells:
            diff = abs(measured - stored)
            ok = diff <= tol
            if not ok:
                failures.append(f"row {index} {name}: |diff| = {diff:.4f}")
            print(
                f"{index}    {name:<10}  {measured:.4f}    {stored:.4f}   "
                f"{diff:.4f}   {'ok' if ok else 'FAIL'}"
            )
    print(f"elapsed {elapsed:.3f}s (budget {budget:g}s); tolerance +/-{tol:g}")
    assert elapsed < budget
    assert not failures, (
        f"{len(failures)}/18 stored cells outside +/-{tol:g}: "
        + "; ".join(failures)
    )


def test_criterion_3_lopsided_scenario_lands_below_gamma1():
    budget = 2.0
    seeds = 20
    start = time.perf_counter()
    ref = REFERENCE_ROWS[EXCEPTIONAL_ROW_INDEX]
    below = 0
    for replicate in range(seeds):
        spec = two_signal_spec(
            ref.alpha,
            ref.beta1,
            ref.beta2,
            n=10_000,
            seed=scenario_seed(0, EXCEPTIONAL_ROW_INDEX, replicate),
        )
        scenario = generate(spec)
        s1, s2 = scenario.signals
        extraction = symmetric_extract(TwoSignalObservation(s1, s2))
        if correlation(extraction.s_best, scenario.a) < correlation(
            s1, scenario.a
        ):
            below += 1
    elapsed = time.perf_counter() - start
    fraction = below / seeds
    print(
        f"alpha={ref.alpha:g} beta1={ref.beta1:g} beta2={ref.beta2:g}: "
        f"extraction below gamma1 in {below}/{seeds} seeds "
        f"(fraction {fraction:.2f}); elapsed {elapsed:.3f}s"
    )
    assert elapsed < budget
    assert fraction > 0.5


def test_criterion_4_measurement_and_model_routes_agree():
    budget = 1.0
    tol = 1e-12
    models = 1000
    start = time.perf_counter()
    rng = np.random.default_rng(1234)
    worst_weight = worst_gamma = worst_sample = worst_sym = 0.0
    for index in range(models):
        alpha = float(rng.uniform(0.01, 4.0) * rng.choice([-1.0, 1.0]))
        beta1, beta2 = (float(b) for b in rng.uniform(0.01, 4.0, size=2))
        spec = two_signal_spec(
            alpha, beta1, beta2, n=32, seed=int(rng.integers(2**63)),
            kinds=("gaussian-white-noise", "gaussian-white-noise"),
        )
        s1, s2 = generate(spec).signals
        obs = TwoSignalObservation(s1, s2)
        lo = abs(obs.gamma12)
        gamma1 = lo + float(rng.uniform(0.05, 0.95)) * (1.0 - lo)

        direct = parametric_extract(obs, gamma1)
        via_model = optimal_weights(invert_model(obs, gamma1))
        worst_weight = max(
            worst_weight,
            _rel(direct.w1, via_model.w1),
            _rel(direct.w2, via_model.w2),
        )
        worst_gamma = max(
            worst_gamma, _rel(direct.gamma_best, via_model.gamma_best)
        )
        recombined = linear_combination((s1, s2), (via_model.w1, via_model.w2))
        scale = float(np.max(np.abs(direct.s_best.values))) or 1.0
        worst_sample = max(
            worst_sample,
            float(np.max(np.abs(direct.s_best.values - recombined.values)))
            / scale,
        )

        symmetric = symmetric_extract(obs)
        at_slice = parametric_extract(obs, math.sqrt(lo))
        worst_sym = max(
            worst_sym,
            _rel(symmetric.w1, at_slice.w1),
            _rel(symmetric.w2, at_slice.w2),
            _rel(symmetric.gamma_best, at_slice.gamma_best),
        )
    elapsed = time.perf_counter() - start
    print(
        f"{models} random observations: worst relative deviations — "
        f"weights {worst_weight:.2e}, gamma_best {worst_gamma:.2e}, "
        f"samples {worst_sample:.2e}, symmetric-vs-slice {worst_sym:.2e}; "
        f"elapsed {elapsed:.3f}s"
    )
    assert elapsed < budget
    assert worst_weight <= tol
    assert worst_gamma <= tol
    assert worst_sample <= tol
    assert worst_sym <= tol


def test_criterion_5_claimed_optimum_is_an_optimum():
    budget = 1.0
    floor_slack = 1e-12
    gain_slack = 1e-9
    bump = 1e-4
    models = 1000
    start = time.perf_counter()
    rng = np.random.default_rng(4321)
    worst_floor2 = worst_gain2 = worst_floor3 = worst_gain3 = -math.inf
    for _ in range(models):
        alpha = float(rng.uniform(0.01, 4.0) * rng.choice([-1.0, 1.0]))
        beta1, beta2 = (float(b) for b in rng.uniform(0.01, 4.0, size=2))
        model2 = TwoSignalModel(alpha=alpha, beta1=beta1, beta2=beta2)
        best2 = optimal_weights(model2)
        gamma1 = 1.0 / math.sqrt(1.0 + beta1**2)
        gamma2 = 1.0 / math.sqrt(1.0 + beta2**2)
        worst_floor2 = max(
            worst_floor2, max(gamma1, gamma2) - best2.gamma_best
        )
        for dw1 in (-bump, 0.0, bump):
            for dw2 in (-bump, 0.0, bump):
                tweaked = predicted_extraction_correlation(
                    model2, best2.w1 * (1.0 + dw1), best2.w2 * (1.0 + dw2)
                )
                worst_gain2 = max(worst_gain2, tweaked - best2.gamma_best)

        alpha3 = float(rng.uniform(0.01, 4.0) * rng.choice([-1.0, 1.0]))
        betas_sq = tuple(float(b) ** 2 for b in rng.uniform(0.01, 4.0, size=3))
        model3 = ThreeSignalModel(
            alpha2=alpha, alpha3=alpha3, betas_sq=betas_sq
        )
        b1, b2, b3 = betas_sq
        pair_sum = b1 * b2 + b1 * b3 + b2 * b3
        weights = tuple(
            p / (pair_sum * a)
            for p, a in zip((b2 * b3, b1 * b3, b1 * b2), model3.alphas)
        )
        gamma_best3 = math.sqrt(pair_sum / (pair_sum + b1 * b2 * b3))
        top_single = max(
            1.0 / math.sqrt(1.0 + b_sq) for b_sq in betas_sq
        )
        worst_floor3 = max(worst_floor3, top_single - gamma_best3)
        for j in range(3):
            for delta in (-bump, bump):
                tweaked_w = list(weights)
                tweaked_w[j] *= 1.0 + delta
                gain = (
                    predicted_correlation(model3, tweaked_w) - gamma_best3
                )
                worst_gain3 = max(worst_gain3, gain)
    elapsed = time.perf_counter() - start
    print(
        f"{models} random models: two-signal worst floor violation "
        f"{worst_floor2:.2e}, worst perturbation gain {worst_gain2:.2e}; "
        f"three-signal {worst_floor3:.2e} / {worst_gain3:.2e}; "
        f"elapsed {elapsed:.3f}s"
    )
    assert elapsed < budget
    assert worst_floor2 <= floor_slack
    assert worst_gain2 <= gain_slack
    assert worst_floor3 <= floor_slack
    assert worst_gain3 <= gain_slack


def test_criterion_6_three_signal_end_to_end():
    budget = 10.0
    n = 100_000
    seeds = 10
    start = time.perf_counter()
    cases = (
        (1.0, 1.0, (1.0, 1.0, 1.0)),
        (2.0, -1.5, (0.8, 1.2, 0.6)),
    )
    worst_alpha = worst_quality = 0.0
    last = None
    for case_index, (alpha2, alpha3, betas) in enumerate(cases):
        for replicate in range(seeds):
            spec = three_signal_spec(
                alpha2,
                alpha3,
                betas,
                n=n,
                seed=scenario_seed(1000, case_index, replicate),
            )
            scenario = generate(spec)
            solution = extract3(*scenario.signals)  # raises if not ideal
            worst_alpha = max(
                worst_alpha,
                _rel(solution.alphas[1], alpha2),
                _rel(solution.alphas[2], alpha3),
            )
            realized = correlation(solution.s_best, scenario.a)
            worst_quality = max(
                worst_quality, abs(realized - solution.gamma_best)
            )
            last = (scenario, solution)
    scenario, solution = last
    s1, s2, s3 = scenario.signals
    rolled = extract3(s2, s3, s1)
    permutation_drift = abs(rolled.gamma_best - solution.gamma_best)
    elapsed = time.perf_counter() - start
    print(
        f"{len(cases)}x{seeds} scenarios at n={n}: worst strength error "
        f"{worst_alpha:.4f} (tol 0.05), worst |realized - predicted| quality "
        f"{worst_quality:.4f} (tol 0.03), permutation drift "
        f"{permutation_drift:.2e} (tol 1e-12); elapsed {elapsed:.3f}s"
    )
    assert elapsed < budget
    assert worst_alpha <= 0.05
    assert worst_quality <= 0.03
    assert permutation_drift <= 1e-12


def test_criterion_7_contrasts_are_component_free():
    budget = 2.0
    tol = 0.05
    seeds = 20
    n = 10_000
    start = time.perf_counter()
    sums = {"null2": 0.0, "N12": 0.0, "N13": 0.0, "N23": 0.0}
    model2 = TwoSignalModel(alpha=2.0, beta1=1.0, beta2=1.0)
    alphas3 = (1.0, 2.0, -1.5)
    for replicate in range(seeds):
        spec2 = two_signal_spec(
            2.0, 1.0, 1.0, n=n, seed=scenario_seed(7, 0, replicate)
        )
        scen2 = generate(spec2)
        contrast = null_signal(model2, *scen2.signals)
        sums["null2"] += abs(correlation(contrast, scen2.a))

        spec3 = three_signal_spec(
            2.0, -1.5, (0.8, 1.2, 0.6), n=n,
            seed=scenario_seed(7, 1, replicate),
        )
        scen3 = generate(spec3)
        s = scen3.signals
        for key, (i, j) in (("N12", (0, 1)), ("N13", (0, 2)), ("N23", (1, 2))):
            contrast = linear_combination(
                (s[i], s[j]), (alphas3[j], -alphas3[i])
            )
            sums[key] += abs(correlation(contrast, scen3.a))
    elapsed = time.perf_counter() - start
    averages = {key: total / seeds for key, total in sums.items()}
    print(
        "average |corr(contrast, component)| over "
        f"{seeds} seeds: "
        + ", ".join(f"{key} {value:.4f}" for key, value in averages.items())
        + f" (tol {tol:g}); elapsed {elapsed:.3f}s"
    )
    assert elapsed < budget
    assert all(value <= tol for value in averages.values())


def test_criterion_8_demo_table_shows_the_advertised_tradeoff():
    budget = 1.0
    start = time.perf_counter()
    table = exceptional_series()
    a = table.series("A")
    s1 = table.series("S1")
    s2 = table.series("S2")
    corr_best = correlation(table.series("S_best"), a)
    corr_s2 = correlation(s2, a)
    recomputed = symmetric_extract(TwoSignalObservation(s1, s2))
    elapsed = time.perf_counter() - start
    print(
        f"corr(S_best, A) = {corr_best:.4f} vs corr(S2, A) = {corr_s2:.4f}; "
        f"recomputed weights w1 = {recomputed.w1:.4f}, "
        f"w2 = {recomputed.w2:.4f}; elapsed {elapsed:.3f}s"
    )
    assert elapsed < budget
    assert corr_best > corr_s2
    assert abs(recomputed.w2) < abs(recomputed.w1)

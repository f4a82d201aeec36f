"""Best-obtainable common signal extraction from correlated series.

Two or three observed series that share one latent component admit a closed
form for the linear combination most correlated with it. This package
provides the forward model, the inversion from measurable statistics, the
extraction itself, calibrated synthetic scenarios, and a Monte-Carlo
validation harness — plus a CLI (``comsig``) over CSV files.

The numeric kernels run on a compiled backend when built, with a pure-Python
fallback (see :mod:`comsig.backend`).
"""

from .backend import BACKEND
from .csvio import CsvTable, read_csv, write_csv
from .errors import (
    CommonSignalError,
    DegenerateBackgroundWarning,
    DegenerateCombinationError,
    DegenerateModelError,
    LengthMismatchError,
    NoCommonSignalError,
    NotIdealError,
    OutOfRangeError,
    ZeroVarianceError,
)
from .series_stats import (
    Series,
    correlation,
    covariance,
    linear_combination,
    mean,
    std,
    variance,
)
from .synth import (
    BackgroundKind,
    Scenario,
    ScenarioMeasurement,
    ScenarioSpec,
    generate,
    measure,
    three_signal_spec,
    two_signal_spec,
)
from .three_signal import (
    CorrelationTriple,
    IdealityCheck,
    ThreeSignalModel,
    ThreeSignalSolution,
    check_ideality,
    extract3,
    pairwise_correlations,
    recover_strengths,
)
from .two_signal import (
    ExtractionResult,
    ForwardStats,
    TwoSignalModel,
    TwoSignalObservation,
    forward_correlations,
    invert_model,
    null_signal,
    optimal_weights,
    parametric_extract,
    predicted_extraction_correlation,
    symmetric_extract,
)
from .validation import (
    REFERENCE_ROWS,
    ReferenceRow,
    RowValidation,
    ValidationReport,
    exceptional_series,
    run_validation,
    scenario_seed,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "__version__",
    # errors
    "CommonSignalError",
    "LengthMismatchError",
    "ZeroVarianceError",
    "NoCommonSignalError",
    "OutOfRangeError",
    "DegenerateModelError",
    "DegenerateCombinationError",
    "NotIdealError",
    "DegenerateBackgroundWarning",
    # series statistics
    "Series",
    "mean",
    "variance",
    "std",
    "covariance",
    "correlation",
    "linear_combination",
    # CSV tables
    "CsvTable",
    "read_csv",
    "write_csv",
    # two-signal decomposition
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
    # three-signal decomposition
    "ThreeSignalModel",
    "CorrelationTriple",
    "IdealityCheck",
    "ThreeSignalSolution",
    "pairwise_correlations",
    "check_ideality",
    "recover_strengths",
    "extract3",
    # synthetic scenarios
    "BackgroundKind",
    "ScenarioSpec",
    "Scenario",
    "ScenarioMeasurement",
    "two_signal_spec",
    "three_signal_spec",
    "generate",
    "measure",
    # validation
    "ReferenceRow",
    "REFERENCE_ROWS",
    "RowValidation",
    "ValidationReport",
    "scenario_seed",
    "run_validation",
    "exceptional_series",
]

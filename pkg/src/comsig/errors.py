"""Exception and warning types shared across the package."""


class CommonSignalError(Exception):
    """Base class for every error raised by this package."""


class LengthMismatchError(CommonSignalError, ValueError):
    """Two series that must be paired sample-by-sample have different lengths."""


class ZeroVarianceError(CommonSignalError, ValueError):
    """A correlation was requested against a constant (zero-variance) series."""


class NoCommonSignalError(CommonSignalError):
    """A cross correlation needed by the decomposition is exactly zero."""


class OutOfRangeError(CommonSignalError, ValueError):
    """A free parameter lies outside its admissible interval."""


class DegenerateModelError(CommonSignalError):
    """Both backgrounds vanish, so the optimal combination is undefined (0/0)."""


class DegenerateCombinationError(CommonSignalError):
    """A linear combination has zero variance, so its correlation is undefined."""


class NotIdealError(CommonSignalError):
    """Three-signal correlations are inconsistent with a single common component.

    Carries the squared-strength ratios (one per series) so callers can report
    *how* the ideality test failed. Ratios above ``1 + tol`` — or pairwise
    correlation signs with a negative product — admit no real decomposition.
    """

    def __init__(self, message, gammas_sq):
        super().__init__(message)
        self.gammas_sq = tuple(float(g) for g in gammas_sq)


class DegenerateBackgroundWarning(UserWarning):
    """Two or more backgrounds vanish; the noiseless signal is returned as-is."""

"""Exception types shared across the package."""


class HolowindError(Exception):
    """Base class for all domain errors raised by this package."""


class ZeroOnCurve(HolowindError):
    """The curve passes through (or numerically touches) the origin."""

    def __init__(self, message, min_modulus=None, max_modulus=None):
        super().__init__(message)
        self.min_modulus = min_modulus
        self.max_modulus = max_modulus


class Unresolved(HolowindError):
    """The winding could not be certified at the sampling refinement cap."""

    def __init__(self, message, n_used=None, max_step_turn=None):
        super().__init__(message)
        self.n_used = n_used
        self.max_step_turn = max_step_turn


class PoleTooClose(HolowindError):
    """Evaluation point too close to the unit circle for safe quadrature."""


class AverageTooSmall(HolowindError):
    """The mean (1/2*pi*i) * integral of f is too small to normalize by."""


class TailNotBounded(HolowindError):
    """No truncation degree keeps the coefficient tail inside the budget."""


class NoUsablePole(HolowindError):
    """The exterior Cauchy transform is below threshold on the whole grid."""


class ConstructionFailed(HolowindError):
    """A constructed witness failed its independent re-verification."""


class NoConvergence(HolowindError):
    """Root iteration exhausted its budget with residual above tolerance."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class RootNearCircle(HolowindError):
    """A zero or pole sits too close to |z| = 1 for exact counting."""


class CampaignFailure(HolowindError):
    """A randomized trial produced a negative winding (implementation bug)."""

    def __init__(self, message, coefficients=None):
        super().__init__(message)
        self.coefficients = coefficients


class ParseError(HolowindError):
    """Expression text could not be parsed; `position` is the 0-based offset."""

    def __init__(self, message, position):
        super().__init__(message)
        self.position = position

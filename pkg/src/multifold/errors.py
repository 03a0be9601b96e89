"""Exception and warning types shared across the toolkit."""


class MultifoldError(Exception):
    """Base class for toolkit errors."""


class DomainError(MultifoldError):
    """An input is outside the mathematical domain of the operation."""


class DegenerateSpectrum(MultifoldError):
    """The eigenvalue discriminant is negative beyond tolerance.

    Raised when a relative covariance matrix does not have the real,
    reciprocal eigenvalue pair a pure one-mode Gaussian state guarantees
    (typically a sign the matrix did not come from a Gaussian pipeline).
    """


class ComplexityBudget(MultifoldError):
    """A term enumeration was requested beyond the supported fold size."""


class PrecisionExhausted(MultifoldError):
    """The working precision could not certify the requested digits."""


class UnknownFigure(MultifoldError):
    """No predefined scenario exists for the requested figure id."""


class RegimeWarning(UserWarning):
    """A closed-form result is being used outside its validity regime."""

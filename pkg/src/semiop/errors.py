"""Exception types shared across the toolkit."""


class SemiopError(Exception):
    """Base class for all toolkit errors."""


class NotSquareError(SemiopError):
    """A square matrix was required."""


class NotHermitianError(SemiopError):
    """Hermitian deviation exceeds the symmetry tolerance."""


class NotPsdError(SemiopError):
    """An eigenvalue lies below the negative clamping window."""


class NoConvergenceError(SemiopError):
    """The Jacobi sweep cap was exhausted before reaching the target."""


class NegativeEntryError(SemiopError):
    """Entrywise-nonnegative input was required."""


class DimensionMismatchError(SemiopError):
    """Operand shapes are incompatible."""


class NotABoundedError(SemiopError):
    """The operator does not map the metric null space into itself, so its
    seminorm is unbounded."""


class NotInLAError(SemiopError):
    """The operator admits no sharp adjoint for this metric."""


class BadRankError(SemiopError):
    """Requested rank is outside 1..dim."""


class UnsatisfiableKindError(SemiopError):
    """No instance of the requested kind exists for this frame."""


class DegenerateFrameError(SemiopError):
    """The metric has rank zero."""


class ConfigError(SemiopError):
    """Invalid suite or radius configuration."""


class ParseError(SemiopError):
    """A matrix or configuration file could not be parsed."""

"""Exception types raised by the library."""


class AptQubitError(Exception):
    """Base class for all library errors."""


class DomainError(AptQubitError, ValueError):
    """An argument lies outside the domain of the requested quantity."""


class DegenerateGap(DomainError):
    """The qubit sits on an exceptional/degenerate point (omega0 == 0)."""


class NumericalFailure(AptQubitError, ArithmeticError):
    """Base class for failures of a numerical procedure."""


class QuadratureFailure(NumericalFailure):
    """Adaptive quadrature ran out of subdivisions before meeting tolerance."""


class NormalizationCollapse(NumericalFailure):
    """The trace of a non-unitarily evolved density matrix underflowed."""


class TruncationError(NumericalFailure):
    """A Fock-space result is not converged in the cutoff."""


class ConditioningFailure(NumericalFailure):
    """A matrix that must be inverted is too ill-conditioned."""


class EmptyCurve(AptQubitError, ValueError):
    """A curve vanishes identically on the sampling grid."""

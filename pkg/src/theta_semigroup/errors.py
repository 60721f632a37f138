"""Exception hierarchy shared by every module of the package."""


class ThetaError(Exception):
    """Base class for all errors raised by :mod:`theta_semigroup`."""

    code = "theta_error"


class DomainError(ThetaError, ValueError):
    """An operation was called outside its mathematical domain."""

    code = "domain_error"


class NotInfinitelyDivisible(DomainError):
    code = "not_infinitely_divisible"


class NotInterior(DomainError):
    code = "not_interior"


class EmptyInput(ThetaError, ValueError):
    code = "empty_input"


class ConstructionFailure(ThetaError, RuntimeError):
    """A constructive factorization could not finish (indicates a bug)."""

    code = "construction_failure"


class InternalError(ThetaError, RuntimeError):
    """A numerical invariant was violated, e.g. a conditional probability
    far outside [0, 1], which points at a misclassification upstream."""

    code = "internal_error"

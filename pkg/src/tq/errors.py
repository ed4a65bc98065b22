"""Exception types shared across the package."""


class TqError(Exception):
    """Base class for package errors."""


class InputError(TqError, ValueError):
    """Invalid user-supplied data (non-squarefree d, zero rational, ...)."""


class UnsupportedGroupError(TqError):
    """Operation invoked on a group it is not defined for."""


class ContractViolationError(TqError):
    """Structured data does not satisfy a documented precondition
    (non-invertible cohomology iso, shape mismatch, dimension mismatch)."""

"""Exceptions raised by gv-bounds."""


class GVBoundsError(Exception):
    """Base class for all gv-bounds errors."""


class InvalidParametersError(GVBoundsError, ValueError):
    """Parameters violate the preconditions of an operation."""


class BudgetExceededError(GVBoundsError, RuntimeError):
    """A vertex, row or search budget would be exceeded."""


class ThresholdNotFoundError(GVBoundsError, ValueError):
    """Sparsity conditions fail on every grid point of a threshold scan."""


class CodebookError(GVBoundsError, ValueError):
    """A codebook is malformed."""

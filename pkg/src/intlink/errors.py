"""Exception types shared across the package."""


class InvalidDeletionError(ValueError):
    """Deleting this simplex would break downward closure (it is a proper face)."""


class UnsupportedSizeError(ValueError):
    """Input exceeds the size bound this exhaustive routine is designed for."""


class UnsupportedDimensionError(ValueError):
    """Requested dimension is outside the implemented range."""


class PreconditionError(ValueError):
    """A documented precondition of the operation does not hold."""


class DegeneracyError(RuntimeError):
    """An exact predicate hit a non-generic configuration; caller should resample.

    `context` names the offending simplex pair or apex, when known.
    """

    def __init__(self, message, context=None):
        super().__init__(message)
        self.context = context


class SamplingError(RuntimeError):
    """Random sampling exhausted its attempt budget without a valid sample."""

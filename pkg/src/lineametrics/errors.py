"""Exception types shared across the package."""


class LineametricsError(Exception):
    """Base class for all errors raised by lineametrics."""


class EmptyCorpusError(LineametricsError, ValueError):
    """Raised when an operation needs corpus data that is absent or too small."""


class InvalidParameterError(LineametricsError, ValueError):
    """Raised when an argument is outside its documented domain."""

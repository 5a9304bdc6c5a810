"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Malformed graph input. ``line`` is 1-based, or None if not line-specific."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class WorkLimitExceeded(RuntimeError):
    """An intermediate expression grew past the configured size guard."""


class VerificationError(AssertionError):
    """A cross-check between two independent computations disagreed."""

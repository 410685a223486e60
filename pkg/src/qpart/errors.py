"""Shared exception types.

The CLI maps these onto exit codes: malformed inputs or bad arguments
exit 2, resource limits exit 3, internal invariant failures exit 4.
"""


class InvalidInstanceError(ValueError):
    """A graph or instance configuration violates a structural precondition."""


class ParseError(ValueError):
    """Malformed input text; carries the offending line number when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DimensionError(ValueError):
    """An assignment does not cover the variables it is applied to."""


class ResourceLimitError(RuntimeError):
    """The requested computation exceeds an enumeration guard."""


class InternalInvariantError(AssertionError):
    """An internal consistency check failed; indicates a bug, not bad input."""

"""Exception hierarchy shared by every ramseykit module."""


class RamseyKitError(Exception):
    """Base class for all errors raised by this package."""


class InputError(RamseyKitError, ValueError):
    """A precondition or domain restriction was violated by the caller."""


class CapacityError(RamseyKitError):
    """The request exceeds a hard size cap of an exhaustive routine."""


class ParseError(InputError):
    """Malformed graph or coloring text.

    Carries the 1-based line number of the offending line when known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SearchBudgetExceeded(RamseyKitError):
    """A backtracking search hit its node budget before deciding the instance."""


class EmbedFailure(RamseyKitError):
    """A best-effort embedding step failed at desk scale (reportable outcome)."""


class ContractViolation(RamseyKitError):
    """An internal guarantee failed; indicates a bug, never normal operation."""

"""Exception hierarchy shared by every limpack module."""

from __future__ import annotations


class LimpackError(Exception):
    """Base class for all errors raised by limpack."""


class InputError(LimpackError, ValueError):
    """Malformed input: bad file contents, out-of-range vertices, bad parameters."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}" if line is not None else message)


class PreconditionError(LimpackError):
    """The input is well formed but violates an operation's structural precondition."""


class ResourceLimitError(LimpackError):
    """The instance is too large for an exhaustive method."""


class InfeasibleError(LimpackError):
    """No feasible solution exists (e.g. ℓ-tuple domination with ℓ > δ + 1)."""


class ReductionError(LimpackError):
    """No sound reduction step applies to a component; indicates a bug."""

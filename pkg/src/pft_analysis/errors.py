"""Exception types raised by the analysis routines.

Each error carries a short, stable ``code`` so that the command-line front end
can report failures uniformly and tests can match on them.
"""

from typing import Optional


class PftError(ValueError):
    """Base class for domain errors with a stable error code."""
    code = "pft-error"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)


class AperiodicEmptyError(PftError):
    """The graph has no cycles, so there are no cycle lengths to take a gcd of."""
    code = "aperiodic-empty"


class RequiresDeterministicError(PftError):
    """The operation needs a deterministic presentation."""
    code = "requires-deterministic"


class ArrangementInapplicableError(PftError):
    """The block arrangement of the characteristic polynomial identity does not apply."""
    code = "arrangement-inapplicable"


class TGraphUndefinedError(PftError):
    """The graphical period is only defined for irreducible shifts."""
    code = "t-graph-undefined"


class DeskScaleExceededError(PftError):
    """A family generator was asked for a size beyond what enumeration can handle."""
    code = "desk-scale-exceeded"


class SpecFileError(PftError):
    """Malformed shift-spec document."""
    code = "parse-error"

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column or 1}: {message}"
        super().__init__(message)


__all__ = [
    "PftError",
    "AperiodicEmptyError",
    "RequiresDeterministicError",
    "ArrangementInapplicableError",
    "TGraphUndefinedError",
    "DeskScaleExceededError",
    "SpecFileError",
]

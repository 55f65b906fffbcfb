"""Exception types shared across the package."""
from __future__ import annotations


class CoronaKitError(Exception):
    """Base class for errors raised by this package."""


class PreconditionError(CoronaKitError):
    """An input graph violates a documented precondition.

    Raised for requests such as a corona product of an empty first factor,
    resistance on a disconnected graph, or an edge-product formula applied
    to a non-regular second factor.
    """


class SingularMatrixError(CoronaKitError):
    """A matrix required to be invertible is singular to working tolerance."""


class EdgeListError(CoronaKitError):
    """Malformed edge-list text.  Carries the offending line number."""

    def __init__(self, line_no: int | None, message: str) -> None:
        self.line_no = line_no
        if line_no is None:
            super().__init__(message)
        else:
            super().__init__(f"line {line_no}: {message}")

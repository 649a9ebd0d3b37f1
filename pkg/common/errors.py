"""Exceptions shared by every fixbound package.

Each class carries the process exit code the CLI uses when it escapes a command.
"""

import logging

mylogger = logging.getLogger(__name__)


class FixboundError(Exception):
    """Base exception with a message. Optionally logged at construction."""

    exit_code = 3

    def __init__(self, message: str = "A fixbound error occurred", log: bool = False):
        self.message = message
        super().__init__(self.message)
        if log:
            mylogger.error(message)


class ParseError(FixboundError):
    """Matrix literal, word or presentation text could not be parsed."""

    exit_code = 2


class ShapeError(FixboundError, ValueError):
    """Non-square input, dimension mismatch or a matrix above the size cap."""


class PreconditionError(FixboundError, ValueError):
    """An operation was called outside its documented preconditions."""


class ZeroBranchError(PreconditionError):
    """det(I - L^k) = 0: indices are undefined, use the Nielsen-zero branch."""


class NotInSubgroupError(PreconditionError):
    """An element outside the finite-index subgroup Gamma' was passed to theta."""


class InvalidHomomorphismError(PreconditionError):
    """A matrix does not annihilate every relator, so it defines no homomorphism."""


class AlgebraicFailure(FixboundError):
    """An identity that must hold failed. Always an implementation bug."""

    exit_code = 1


__all__ = [
    "AlgebraicFailure",
    "FixboundError",
    "InvalidHomomorphismError",
    "NotInSubgroupError",
    "ParseError",
    "PreconditionError",
    "ShapeError",
    "ZeroBranchError",
]

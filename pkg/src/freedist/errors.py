"""Exception hierarchy shared by every module."""

from __future__ import annotations


class FreeDistError(Exception):
    """Base class for all errors raised by this package."""


class PreconditionError(FreeDistError, ValueError):
    """Input violates an algorithm precondition (bad field, bad matrix, ...)."""


# field
class NonPrimeCharacteristic(PreconditionError):
    pass


class ReducibleModulus(PreconditionError):
    pass


class MissingModulus(PreconditionError):
    pass


class MalformedModulus(PreconditionError):
    pass


class DivisionByZero(FreeDistError, ZeroDivisionError):
    pass


# polynomial matrices
class ZeroRow(PreconditionError):
    pass


class RankDeficient(PreconditionError):
    pass


class NotRowReduced(PreconditionError):
    pass


class Catastrophic(PreconditionError):
    pass


class DimensionMismatch(PreconditionError):
    pass


# searches
class BadBound(PreconditionError):
    pass


class StateSpaceTooLarge(PreconditionError):
    pass


class UnsupportedRate(PreconditionError):
    pass


class MalformedDiagram(PreconditionError):
    pass


# cli / io
class ParseError(FreeDistError):
    pass


class MismatchedDistance(FreeDistError):
    """A correct engine disagreed with the oracle. Always a bug."""

"""Exception hierarchy for the transperm library.

DomainError subclasses signal mathematically invalid inputs (CLI exit 3);
FormatError signals unparseable text or JSON (CLI exit 2).
"""


class TranspermError(Exception):
    pass


class DomainError(TranspermError):
    pass


class FormatError(TranspermError):
    pass


class DuplicateResidue(DomainError):
    pass


class NotAWindowPermutation(DomainError):
    pass


class BadPeriod(DomainError):
    pass


class PeriodMismatch(DomainError):
    pass


class ShiftMismatch(DomainError):
    pass


class NotSubmodular(DomainError):
    pass


class BadAsymptotics(DomainError):
    pass


class InconsistentPeriod(DomainError):
    pass


class EmptySequence(DomainError):
    pass


class TooLarge(DomainError):
    pass


class NoUniqueMax(DomainError):
    """Internal-consistency failure: a set of products had no Bruhat maximum."""


class ShiftNonzero(DomainError):
    pass


class ShiftSumMismatch(DomainError):
    pass


class BadParameters(DomainError):
    pass

"""Exception hierarchy. Each class carries the CLI exit code it maps to."""


class SL2CFError(Exception):
    exit_code = 4


class InvalidInput(SL2CFError, ValueError):
    exit_code = 2


class DegenerateSequence(InvalidInput):
    """A continued fraction hit a zero tail where a reciprocal was needed."""


class SequenceClassError(InvalidInput):
    """A quotient sequence does not belong to the class an operation requires."""


class NotUnimodular(InvalidInput):
    pass


class SearchSpaceTooLarge(InvalidInput):
    pass


class UnsupportedParameters(SL2CFError):
    exit_code = 3


class Inconsistency(SL2CFError, RuntimeError):
    """A state the theory rules out was reached; indicates a bug or bad input."""

    exit_code = 4

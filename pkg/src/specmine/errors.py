"""Exception hierarchy shared by every module."""


class SpecMineError(Exception):
    """Base class for all errors raised by specmine."""


class ModelError(SpecMineError):
    """An automaton violates a structural invariant."""


class NotDeterministicError(SpecMineError):
    """An operation that needs a DFA was given an NFA."""


class NoModelsError(SpecMineError):
    """epsilon_union was called with nothing to combine."""


class ParseError(SpecMineError):
    """Malformed trace corpus or model file."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptyCorpusError(SpecMineError):
    """A corpus with no traces where at least one is required."""


class ConfigError(SpecMineError):
    """Invalid mining or evaluation parameters."""


class InvariantViolation(SpecMineError):
    """A result failed a post-condition check (a bug, not bad input)."""

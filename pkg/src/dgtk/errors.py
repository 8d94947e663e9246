"""Shared exception types."""


class PreconditionError(ValueError):
    """Input falls outside an operation's contract.

    Carries the recognition witness when the violated precondition is a
    digraph-class membership check.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InternalCheckError(RuntimeError):
    """A postcondition re-verification failed.

    Raised when a constructive operation finds that its own output does not
    satisfy the properties it is supposed to guarantee.  Signals either a bug
    or an input that slipped past the precondition checks.
    """


class UnsupportedSizeError(ValueError):
    """The requested computation exceeds a documented size bound."""

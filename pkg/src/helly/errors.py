"""Shared exception types."""


class InvariantViolation(RuntimeError):
    """A condition the library guarantees by construction failed.

    This is never a data problem: if it fires, the library itself is
    wrong, and callers should let it propagate rather than catch it.
    """

"""Exception hierarchy.

Input problems derive from :class:`PptError` (a ``ValueError``); an internal
cross-check mismatch raises :class:`InvariantViolation`, which is a bug and
not a user error.
"""


class PptError(ValueError):
    pass


class InvalidTriple(PptError):
    pass


class NotPythagorean(PptError):
    pass


class NotPrimitive(PptError):
    pass


class NotPrimitiveHat(PptError):
    pass


class DomainError(PptError):
    pass


class MalformedPath(PptError):
    pass


class DepthLimit(PptError):
    pass


class InvariantViolation(AssertionError):
    """Two independent computations disagreed.

    ``counterexample`` holds the offending input so callers can report it.
    """

    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample

"""Exception hierarchy.

Everything a caller can trigger with bad input derives from :class:`RootgateError`;
the CLI maps those to exit code 2.  :class:`InvariantViolation` signals a bug in
the library itself and maps to exit code 1.
"""


class RootgateError(Exception):
    """Base class for user-facing errors."""


class InvalidRank(RootgateError, ValueError):
    pass


class NonConvergence(RootgateError, RuntimeError):
    pass


class RootNotInSystem(RootgateError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class RankTooSmall(RootgateError, ValueError):
    pass


class RankTooLarge(RootgateError, ValueError):
    pass


class NoNoncompactFactor(RootgateError, ValueError):
    pass


class CompactFactor(RootgateError, ValueError):
    pass


class UnsupportedAlgebra(RootgateError, ValueError):
    pass


class ParseError(RootgateError, ValueError):
    """Malformed algebra descriptor; ``position`` is a 0-based column."""

    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}")


class InvariantViolation(RuntimeError):
    """An internal consistency check failed.  Never expected to happen."""

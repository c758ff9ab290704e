"""Exception hierarchy shared by every module."""


class InversysError(Exception):
    """Base class for all errors raised by inversys."""


class ParseError(InversysError, ValueError):
    """Malformed polynomial text.  ``position`` is a 0-based offset."""

    def __init__(self, message, text="", position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class InputError(InversysError, ValueError):
    """Input violates a precondition (inhomogeneous form, wrong arity, ...)."""


class DimensionError(InputError):
    """Operands live in polynomial rings with different variable counts."""


class InvariantError(InversysError, RuntimeError):
    """An internal consistency check failed.  Always a bug or a theorem breach."""

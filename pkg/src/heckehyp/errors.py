"""Exception hierarchy shared by every module of the package."""


class HeckeError(Exception):
    """Base class for all errors raised by heckehyp."""


class DivisionByZero(HeckeError, ZeroDivisionError):
    pass


class InsufficientOrder(HeckeError, ValueError):
    """The input series is too short to produce the requested output order."""


class DivisibleJ(HeckeError, ValueError):
    pass


class NotDivisibleJ(HeckeError, ValueError):
    pass


class IllegalParameter(HeckeError, ValueError):
    """A lower parameter is a non-positive integer, or a parameter is otherwise unusable."""


class Unbalanced(HeckeError, ValueError):
    pass


class BadExponent(HeckeError, ValueError):
    pass


class LengthMismatch(HeckeError, ValueError):
    pass


class ParseError(HeckeError, ValueError):
    """Malformed scalar text or document."""


class OracleMismatch(HeckeError, AssertionError):
    """Two independent routes to the same quantity disagreed. Always a bug."""

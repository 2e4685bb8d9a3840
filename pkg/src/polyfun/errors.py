"""Exception hierarchy shared by every module of the package."""


class PolyfunError(Exception):
    """Base class for all package errors."""


class SpecSyntaxError(PolyfunError, ValueError):
    """Malformed ring spec, element token, polynomial or function table."""

    def __init__(self, message, text="", pos=0, expected=()):
        self.text = text
        self.pos = pos
        self.expected = tuple(expected)
        detail = message
        if expected:
            detail += " (expected %s)" % " or ".join(repr(e) for e in self.expected)
        if text:
            detail += " at position %d in %r" % (pos, text)
        super().__init__(detail)


class DomainError(PolyfunError, ValueError):
    """Well-formed input outside the mathematical domain (n < 2, non-prime GF base, ...)."""


class BudgetError(PolyfunError):
    """A configured size or work cap was exceeded."""


class NotAFieldError(PolyfunError, ArithmeticError):
    """An operation needing multiplicative inverses was given a non-field."""

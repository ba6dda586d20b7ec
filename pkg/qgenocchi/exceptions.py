"""Exceptions used by qgenocchi."""


class QGenError(Exception):
    """qgenocchi general exception."""
    pass


class UndefinedGcdError(QGenError, ValueError):
    """Greatest common divisor of two zero polynomials was requested."""
    pass


class DivisionByZeroError(QGenError, ZeroDivisionError):
    """Division by a zero polynomial or a zero rational function."""
    pass


class InexactDivisionError(QGenError, ArithmeticError):
    """Exact polynomial division where the divisor does not divide."""
    pass


class PoleError(QGenError, ZeroDivisionError):
    """A rational function was evaluated at a root of its denominator."""
    pass


class ParseError(QGenError, ValueError):
    """A plain-format expression could not be parsed."""
    pass


class ParityError(QGenError, ValueError):
    """An odd parameter was required but an even one was given."""
    pass


class OracleDomainError(QGenError, ValueError):
    """The series oracle was asked for q outside (0, 1)."""
    pass


class IdentityError(QGenError, ValueError):
    """Unknown identity, unknown variant or bad identity parameters."""
    pass


class UnevaluableError(QGenError):
    """An identity variant cannot be computed in the form it was written."""
    pass


class ConfigError(QGenError, ValueError):
    """The suite configuration is malformed."""
    pass

"""Exception types raised by overq."""


class OverqError(Exception):
    """Base class for all overq errors."""


class NonUnitConstantTerm(OverqError, ArithmeticError):
    """A series without a +1/-1 constant term was inverted."""


class OutOfRange(OverqError, ValueError):
    """An index argument lies outside its admissible range."""


class DomainError(OverqError, ValueError):
    """A function was called outside its mathematical domain."""


class BudgetExceeded(OverqError):
    """An exhaustive enumeration would exceed the configured budget."""

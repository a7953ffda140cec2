"""Exception hierarchy shared by every gaussphi module."""


class GaussPhiError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(GaussPhiError, ValueError):
    """Text does not follow the Gaussian literal grammar."""


class DigitError(ParseError):
    """Digit string contains a character outside ``0 1 n i m``."""


class RangeOverflow(GaussPhiError, OverflowError):
    """A coordinate left the supported machine range (magnitude < 2**62)."""


class NotDivisible(GaussPhiError, ArithmeticError):
    """Exact division requested where the divisor does not divide."""


class ZeroInput(GaussPhiError, ValueError):
    """Operation is undefined at 0 (phi, valuation)."""


class ContractViolation(GaussPhiError, ValueError):
    """Caller broke a documented precondition."""


class RegionTooLarge(GaussPhiError):
    """Enumeration box exceeds the point budget."""


class BudgetExceeded(GaussPhiError):
    """Oracle level requested beyond what fits in memory."""


class OutOfOracleRange(GaussPhiError):
    """Point is not covered by the oracle's level map."""

"""Exception hierarchy shared by all comporder modules."""


class CompOrderError(Exception):
    """Base class for every error raised by this package."""


class ZeroDenominator(CompOrderError, ZeroDivisionError):
    pass


class ParseError(CompOrderError, ValueError):
    """Malformed rational text or instance document."""


class ContractViolation(CompOrderError):
    """Input well-formed but outside what the called routine accepts."""


class IdentityFunction(ContractViolation):
    pass


class NonMonotone(ContractViolation, ValueError):
    pass


class InvalidK(ContractViolation, ValueError):
    pass


class Unsupported(ContractViolation):
    pass


class BadDistribution(ContractViolation, ValueError):
    pass


class NotEvenSum(ContractViolation, ValueError):
    pass


class BadInput(ContractViolation, ValueError):
    pass


class TooLarge(CompOrderError):
    """Brute-force enumeration refused because n exceeds the oracle limit."""

"""Exception types shared across the library.

Every error raised on a violated precondition derives from CarlitzError so
callers (in particular the CLI) can distinguish library failures from bugs.
"""


class CarlitzError(Exception):
    """Base class for all library errors."""


class NonPrimeCharacteristic(CarlitzError):
    """The requested characteristic p is not a prime number."""


class ReducibleModulus(CarlitzError):
    """The extension modulus factors over the prime field."""


class ModulusDegreeMismatch(CarlitzError):
    """The extension modulus does not have degree e (or is missing/extra)."""


class MixedFields(CarlitzError):
    """Two operands belong to different field specs."""


class DivisionByZero(CarlitzError, ZeroDivisionError):
    """Division by the zero element / polynomial / rational function."""


class BothZero(CarlitzError):
    """gcd(0, 0) requested."""


class ExponentOverflow(CarlitzError):
    """A degree or exponent such as r^i exceeded the checked 2^62 bound."""


class NonUnitConstantTerm(CarlitzError):
    """Series inversion requires a nonzero constant coefficient."""


class InnerConstantNonzero(CarlitzError):
    """Series composition requires the inner series to vanish at 0."""


class OrderUnderflow(CarlitzError):
    """A coefficient beyond the valid truncation order was requested."""


class IndexTooLarge(CarlitzError):
    """An index exceeds the supported bound for this operation."""


class IndexTooLargeForLiteralEnumeration(IndexTooLarge):
    """The literal-enumeration methods are capped to keep 2^(m-1) terms sane."""


class ParseError(CarlitzError):
    """Malformed text input; carries a line number when one is known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NormalizationError(CarlitzError):
    """A custom coefficient series does not start with constant term 1."""

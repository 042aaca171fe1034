"""Exact Appell-Carlitz numbers over the rational function field F_r(T).

Bernoulli-Carlitz and Cauchy-Carlitz numbers (and any custom family given by
its reciprocal-series coefficients) computed by five independent methods
that are cross-checked against each other: series inversion, the recurrence,
a literal composition sum, a partition sum, and a Hessenberg determinant.
"""

from .errors import (
    BothZero,
    CarlitzError,
    DivisionByZero,
    ExponentOverflow,
    IndexTooLarge,
    IndexTooLargeForLiteralEnumeration,
    InnerConstantNonzero,
    MixedFields,
    ModulusDegreeMismatch,
    NonPrimeCharacteristic,
    NonUnitConstantTerm,
    NormalizationError,
    OrderUnderflow,
    ParseError,
    ReducibleModulus,
)
from .ff import FieldElement, FieldSpec, field_arith, field_make, integer_embed
from .polyring import Poly, parse_poly, poly_arith, poly_divmod, poly_gcd
from .ratfunc import RatFunc, parse_ratfunc, rf_arith, rf_normalize

__version__ = "0.1.0"

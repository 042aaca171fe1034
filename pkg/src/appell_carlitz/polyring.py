"""Dense univariate polynomials over F_r in the indeterminate T.

Coefficients are stored as an int64 array of shape (n, e) -- one row of
power-basis coordinates per power of T, trailing zero rows stripped (the zero
polynomial has zero rows).  Multiplication, Euclidean division and gcd run
through the kernel backend; degrees are checked against a 2^62 bound so an
oversized r^i aborts instead of wrapping.

Values are immutable and freely shareable.
"""

from __future__ import annotations

import numpy as np

from . import backend
from .errors import (
    BothZero,
    DivisionByZero,
    ExponentOverflow,
    MixedFields,
    ParseError,
)
from .ff import FieldElement, FieldSpec, format_element, parse_element

_MAX_EXPONENT = 2**62


def _check_exponent(k: int) -> int:
    k = int(k)
    if k > _MAX_EXPONENT:
        raise ExponentOverflow(f"degree {k} exceeds the 2^62 bound")
    return k


def _trim(arr: np.ndarray) -> np.ndarray:
    n = arr.shape[0]
    while n > 0 and not arr[n - 1].any():
        n -= 1
    return arr[:n]


class Poly:
    """Immutable dense polynomial; build via the classmethods or parse()."""

    __slots__ = ("spec", "_c")

    def __init__(self, spec: FieldSpec, rows):
        arr = np.asarray(rows, dtype=np.int64)
        if arr.ndim == 1:
            arr = arr.reshape(-1, 1) if spec.e == 1 else arr.reshape(1, -1)
        if arr.size == 0:
            arr = arr.reshape(0, spec.e)
        if arr.shape[1] != spec.e:
            raise ValueError(f"coefficient rows must have width {spec.e}")
        arr = np.ascontiguousarray(_trim(arr % spec.p))
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "_c", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _from_array(cls, spec: FieldSpec, arr: np.ndarray) -> "Poly":
        # trusted: already reduced mod p, trimmed, contiguous
        obj = object.__new__(cls)
        object.__setattr__(obj, "spec", spec)
        object.__setattr__(obj, "_c", arr)
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, spec: FieldSpec) -> "Poly":
        return cls._from_array(spec, np.zeros((0, spec.e), np.int64))

    @classmethod
    def one(cls, spec: FieldSpec) -> "Poly":
        return cls.constant(spec.one())

    @classmethod
    def constant(cls, c: FieldElement) -> "Poly":
        if c.is_zero():
            return cls.zero(c.spec)
        return cls._from_array(c.spec, c.to_array().reshape(1, -1))

    @classmethod
    def monomial(cls, spec: FieldSpec, k: int, coeff=None) -> "Poly":
        """coeff * T^k (coeff defaults to 1; accepts an int or FieldElement)."""
        k = _check_exponent(k)
        if coeff is None:
            coeff = spec.one()
        elif isinstance(coeff, int):
            coeff = spec.element(coeff)
        if coeff.is_zero():
            return cls.zero(spec)
        arr = np.zeros((k + 1, spec.e), np.int64)
        arr[k] = coeff.to_array()
        return cls._from_array(spec, arr)

    @classmethod
    def from_terms(cls, spec: FieldSpec, terms: dict) -> "Poly":
        """Polynomial from {degree: coefficient} with int or element values."""
        if not terms:
            return cls.zero(spec)
        top = _check_exponent(max(terms))
        arr = np.zeros((top + 1, spec.e), np.int64)
        for k, c in terms.items():
            if isinstance(c, int):
                c = spec.element(c)
            arr[k] = c.to_array()
        return cls._from_array(spec, np.ascontiguousarray(_trim(arr)))

    @classmethod
    def from_elements(cls, spec: FieldSpec, coeffs) -> "Poly":
        """Polynomial from ascending coefficients (ints or FieldElements)."""
        rows = []
        for c in coeffs:
            if isinstance(c, int):
                c = spec.element(c)
            rows.append(c.to_array())
        if not rows:
            return cls.zero(spec)
        return cls(spec, np.stack(rows))

    # -- structure ----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return self._c.shape[0] - 1

    @property
    def is_zero(self) -> bool:
        return self._c.shape[0] == 0

    @property
    def is_one(self) -> bool:
        return self._c.shape[0] == 1 and self.coeff(0) == self.spec.one()

    def coeff(self, k: int) -> FieldElement:
        """Coefficient of T^k (zero beyond the degree)."""
        if k < 0:
            raise ValueError("negative degree")
        if k >= self._c.shape[0]:
            return self.spec.zero()
        return FieldElement(self.spec, tuple(int(v) for v in self._c[k]))

    def lead(self) -> FieldElement:
        if self.is_zero:
            raise DivisionByZero("zero polynomial has no leading coefficient")
        return self.coeff(self.degree)

    @property
    def array(self) -> np.ndarray:
        """Raw (n, e) coefficient array; treat as read-only."""
        return self._c

    def _require_same(self, other):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.spec != self.spec:
            raise MixedFields(f"operands from {self.spec} and {other.spec}")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        self._require_same(other)
        a, b = self._c, other._c
        n = max(a.shape[0], b.shape[0])
        out = np.zeros((n, self.spec.e), np.int64)
        out[: a.shape[0]] = a
        out[: b.shape[0]] = (out[: b.shape[0]] + b) % self.spec.p
        return Poly._from_array(self.spec, np.ascontiguousarray(_trim(out)))

    def __sub__(self, other):
        self._require_same(other)
        a, b = self._c, other._c
        n = max(a.shape[0], b.shape[0])
        out = np.zeros((n, self.spec.e), np.int64)
        out[: a.shape[0]] = a
        out[: b.shape[0]] = (out[: b.shape[0]] - b) % self.spec.p
        return Poly._from_array(self.spec, np.ascontiguousarray(_trim(out)))

    def __neg__(self):
        return Poly._from_array(
            self.spec, np.ascontiguousarray((-self._c) % self.spec.p)
        )

    def __mul__(self, other):
        self._require_same(other)
        if self.is_zero or other.is_zero:
            return Poly.zero(self.spec)
        _check_exponent(self.degree + other.degree)
        out = backend.kernels().poly_mul(
            self._c, other._c, self.spec.p, self.spec.mod_array
        )
        return Poly._from_array(self.spec, out)

    def scale(self, c: FieldElement) -> "Poly":
        """Multiply every coefficient by the field element c."""
        if c.is_zero() or self.is_zero:
            return Poly.zero(self.spec)
        out = backend.kernels().poly_scale(
            self._c, c.to_array(), self.spec.p, self.spec.mod_array
        )
        return Poly._from_array(self.spec, out)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        if n == 0:
            return Poly.one(self.spec)
        if self.is_zero:
            return Poly.zero(self.spec)
        _check_exponent(self.degree * n)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        self._require_same(other)
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        if self.degree < other.degree:
            return Poly.zero(self.spec), self
        q, r = backend.kernels().poly_divmod(
            self._c, other._c, self.spec.p, self.spec.mod_array
        )
        return (
            Poly._from_array(self.spec, q),
            Poly._from_array(self.spec, np.ascontiguousarray(_trim(r))),
        )

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero:
            raise DivisionByZero("zero polynomial cannot be made monic")
        lead = self.lead()
        if lead == self.spec.one():
            return self
        return self.scale(lead.inverse())

    # -- comparisons ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return (
            self.spec == other.spec
            and self._c.shape == other._c.shape
            and bool(np.array_equal(self._c, other._c))
        )

    def __hash__(self):
        return hash((self.spec, self._c.shape[0], self._c.tobytes()))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


# -- spec-named operation wrappers ------------------------------------------


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    """Exact ring operation; op in {add, sub, mul}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder with deg(rem) < deg(b); exact."""
    return divmod(a, b)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd via Euclid; gcd(a, 0) = monic(a)."""
    if a.is_zero and b.is_zero:
        raise BothZero("gcd(0, 0) is undefined")
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    a._require_same(b)
    g = backend.kernels().poly_gcd(a._c, b._c, a.spec.p, a.spec.mod_array)
    return Poly._from_array(a.spec, np.ascontiguousarray(g)).monic()


# -- text form ---------------------------------------------------------------
#
# descending powers, "*" between coefficient and T, "^1" omitted, unit
# coefficients omitted except as the constant term; extension coefficients
# containing "+" or "*" are parenthesised.  Example over F_3: "T^3+2*T".


def _coeff_text(c: FieldElement) -> str:
    s = format_element(c)
    if "+" in s or "*" in s:
        return f"({s})"
    return s


def format_poly(a: Poly) -> str:
    if a.is_zero:
        return "0"
    one = a.spec.one()
    parts = []
    for k in range(a.degree, -1, -1):
        c = a.coeff(k)
        if c.is_zero():
            continue
        var = "" if k == 0 else ("T" if k == 1 else f"T^{k}")
        if k == 0:
            parts.append(_coeff_text(c))
        elif c == one:
            parts.append(var)
        else:
            parts.append(f"{_coeff_text(c)}*{var}")
    return "+".join(parts)


def _split_terms(s: str):
    terms, depth, start = [], 0, 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {s!r}")
        elif ch == "+" and depth == 0:
            terms.append(s[start:i])
            start = i + 1
    if depth != 0:
        raise ParseError(f"unbalanced parentheses in {s!r}")
    terms.append(s[start:])
    return terms


def _strip_parens(s: str) -> str:
    if s.startswith("(") and s.endswith(")"):
        return s[1:-1]
    return s


def parse_poly(text: str, spec: FieldSpec) -> Poly:
    """Inverse of format_poly; accepts any whitespace-free equivalent form."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial")
    if s == "0":
        return Poly.zero(spec)
    terms: dict[int, FieldElement] = {}
    for chunk in _split_terms(s):
        if not chunk:
            raise ParseError(f"empty term in {text!r}")
        # find the variable T at parenthesis depth 0
        tpos, depth = -1, 0
        for i, ch in enumerate(chunk):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "T" and depth == 0:
                tpos = i
                break
        if tpos < 0:
            k, coeff_text = 0, chunk
        else:
            coeff_text = chunk[:tpos]
            if coeff_text.endswith("*"):
                coeff_text = coeff_text[:-1]
            elif coeff_text:
                raise ParseError(f"missing '*' before T in {chunk!r}")
            rest = chunk[tpos + 1 :]
            if rest == "":
                k = 1
            elif rest.startswith("^"):
                try:
                    k = int(rest[1:])
                except ValueError:
                    raise ParseError(f"bad exponent in {chunk!r}") from None
                if k < 0:
                    raise ParseError(f"negative exponent in {chunk!r}")
            else:
                raise ParseError(f"bad term {chunk!r}")
        if coeff_text == "":
            coeff = spec.one()
        else:
            try:
                coeff = parse_element(_strip_parens(coeff_text), spec)
            except ParseError as exc:
                raise ParseError(f"bad coefficient in {chunk!r}: {exc}") from None
        k = _check_exponent(k)
        if k in terms:
            raise ParseError(f"duplicate degree T^{k} in {text!r}")
        terms[k] = coeff
    return Poly.from_terms(spec, terms)

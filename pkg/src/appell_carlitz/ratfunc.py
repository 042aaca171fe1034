"""The rational function field F_r(T): reduced fractions of polynomials.

Canonical form is gcd(num, den) = 1 with a monic denominator (zero is 0/1),
so equality is plain structural comparison -- the cross-method agreement
tests depend on that.  All values are immutable.
"""

from __future__ import annotations

from .errors import DivisionByZero, MixedFields, ParseError
from .ff import FieldElement, FieldSpec
from .polyring import Poly, format_poly, parse_poly, poly_gcd


class RatFunc:
    """Immutable reduced fraction num/den over F_r[T]."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        normalized = rf_normalize(num, den)
        object.__setattr__(self, "num", normalized.num)
        object.__setattr__(self, "den", normalized.den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def _make(cls, num: Poly, den: Poly) -> "RatFunc":
        # trusted: already reduced with monic denominator
        obj = object.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        return obj

    @classmethod
    def zero(cls, spec: FieldSpec) -> "RatFunc":
        return cls._make(Poly.zero(spec), Poly.one(spec))

    @classmethod
    def one(cls, spec: FieldSpec) -> "RatFunc":
        return cls._make(Poly.one(spec), Poly.one(spec))

    @classmethod
    def from_int(cls, spec: FieldSpec, n: int) -> "RatFunc":
        return cls._make(Poly.constant(spec.element(n)), Poly.one(spec))

    @classmethod
    def from_poly(cls, num: Poly) -> "RatFunc":
        return cls._make(num, Poly.one(num.spec))

    @property
    def spec(self) -> FieldSpec:
        return self.num.spec

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_one(self) -> bool:
        return self.num.is_one and self.den.is_one

    def __bool__(self):
        return not self.is_zero

    def _require_same(self, other):
        if not isinstance(other, RatFunc):
            raise TypeError(f"expected RatFunc, got {type(other).__name__}")
        if other.spec != self.spec:
            raise MixedFields(f"operands from {self.spec} and {other.spec}")

    def __add__(self, other):
        self._require_same(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        g = poly_gcd(self.den, other.den)
        if g.is_one:
            t = self.num * other.den + other.num * self.den
            d = self.den * other.den
            return RatFunc._make(t, d) if not t.is_zero else RatFunc.zero(self.spec)
        db = self.den // g
        dd = other.den // g
        t = self.num * dd + other.num * db
        if t.is_zero:
            return RatFunc.zero(self.spec)
        # any factor shared by t and db*dd*g divides g
        h = poly_gcd(t, g)
        if h.is_one:
            return RatFunc._make(t, db * other.den)
        return RatFunc._make(t // h, db * dd * (g // h))

    def __neg__(self):
        return RatFunc._make(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._require_same(other)
        if self.is_zero or other.is_zero:
            return RatFunc.zero(self.spec)
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        num = (self.num if g1.is_one else self.num // g1) * (
            other.num if g2.is_one else other.num // g2
        )
        den = (self.den if g2.is_one else self.den // g2) * (
            other.den if g1.is_one else other.den // g1
        )
        return RatFunc._make(num, den)

    def inverse(self) -> "RatFunc":
        if self.is_zero:
            raise DivisionByZero("zero rational function has no inverse")
        lead_inv = self.num.lead().inverse()
        return RatFunc._make(self.den.scale(lead_inv), self.num.scale(lead_inv))

    def __truediv__(self, other):
        self._require_same(other)
        if other.is_zero:
            raise DivisionByZero("rational function division by zero")
        return self * other.inverse()

    def scale(self, c) -> "RatFunc":
        """Multiply by a constant (FieldElement or int); stays canonical."""
        if isinstance(c, int):
            c = self.spec.element(c)
        if c.is_zero() or self.is_zero:
            return RatFunc.zero(self.spec)
        return RatFunc._make(self.num.scale(c), self.den)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = RatFunc.one(self.spec)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den.is_one:
            return format_poly(self.num)
        return f"{format_poly(self.num)} / {format_poly(self.den)}"

    def __repr__(self):
        return f"RatFunc({self!s})"

    def to_json(self) -> dict:
        return {"num": format_poly(self.num), "den": format_poly(self.den)}

    @classmethod
    def from_json(cls, obj: dict, spec: FieldSpec) -> "RatFunc":
        return cls(parse_poly(obj["num"], spec), parse_poly(obj["den"], spec))


def rf_normalize(num: Poly, den: Poly) -> RatFunc:
    """Canonical fraction: divide out the gcd, scale the denominator monic."""
    num._require_same(den)
    if den.is_zero:
        raise DivisionByZero("zero denominator")
    if num.is_zero:
        return RatFunc._make(Poly.zero(num.spec), Poly.one(num.spec))
    g = poly_gcd(num, den)
    if not g.is_one:
        num = num // g
        den = den // g
    lead = den.lead()
    if lead != den.spec.one():
        inv = lead.inverse()
        num = num.scale(inv)
        den = den.scale(inv)
    return RatFunc._make(num, den)


def rf_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    """Exact field operation; op in {add, sub, mul, div}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def parse_ratfunc(text: str, spec: FieldSpec) -> RatFunc:
    """Parse "num / den" (or bare "num") in polynomial text form."""
    parts = text.split("/")
    if len(parts) == 1:
        return RatFunc.from_poly(parse_poly(parts[0], spec))
    if len(parts) != 2:
        raise ParseError(f"expected at most one '/' in {text!r}")
    num = parse_poly(parts[0], spec)
    den = parse_poly(parts[1], spec)
    return rf_normalize(num, den)


def embed_sign(spec: FieldSpec, k: int) -> FieldElement:
    """(-1)^k as a field element; collapses to 1 in characteristic 2."""
    return spec.element(-1 if k % 2 else 1)

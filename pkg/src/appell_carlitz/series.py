"""Truncated power series over F_r(T) with divided-derivative calculus.

A series holds exactly ``order`` coefficients; every operation states its
output order (add/mul: the minimum, derivative of order m: input order minus
m) and reading past it is a hard error rather than a silent zero -- silent
truncation would corrupt the cross-method equality tests downstream.

The order-m divided derivative maps z^n to binom(n, m) z^(n-m) with the
binomial reduced mod p, which stays well-behaved in positive characteristic
where iterated d/dz degenerates.  Binomials use Lucas base-p digits, so n may
be far larger than anything a factorial table could reach.
"""

from __future__ import annotations

from .errors import (
    InnerConstantNonzero,
    MixedFields,
    NonUnitConstantTerm,
    OrderUnderflow,
)
from .ff import FieldSpec
from .ratfunc import RatFunc, parse_ratfunc


def binom_mod_p(n: int, m: int, p: int) -> int:
    """Binomial coefficient mod p via Lucas digits; 0 when m > n."""
    if m < 0 or n < 0:
        raise ValueError("binomial arguments must be nonnegative")
    if m > n:
        return 0
    result = 1
    while m > 0 or n > 0:
        nd, md = n % p, m % p
        if md > nd:
            return 0
        # digit binomial, multiplicatively, all factors below p
        k = min(md, nd - md)
        acc = 1
        for i in range(k):
            acc = acc * ((nd - i) % p) % p
            acc = acc * pow(i + 1, -1, p) % p
        result = result * acc % p
        if result == 0:
            return 0
        n //= p
        m //= p
    return result


class BinomTable:
    """Memoised binomials mod p (Lucas); shared by the derivative loops."""

    def __init__(self, p: int):
        self.p = p
        self._memo: dict[tuple[int, int], int] = {}

    def __call__(self, n: int, m: int) -> int:
        key = (n, m)
        v = self._memo.get(key)
        if v is None:
            v = binom_mod_p(n, m, self.p)
            self._memo[key] = v
        return v


def multinomial_mod_p(parts, p: int) -> int:
    """(sum parts)! / prod(part!) reduced mod p, via exact big integers."""
    from math import factorial

    total = factorial(sum(parts))
    for part in parts:
        total //= factorial(part)
    return total % p


class TruncSeries:
    """Power series over F_r(T) truncated at an explicit order."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs):
        coeffs = tuple(coeffs)
        for c in coeffs:
            if not isinstance(c, RatFunc):
                raise TypeError("series coefficients must be RatFunc values")
            if c.spec != spec:
                raise MixedFields("series coefficient from a different field")
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @classmethod
    def zero(cls, spec: FieldSpec, order: int) -> "TruncSeries":
        z = RatFunc.zero(spec)
        return cls(spec, (z,) * order)

    @classmethod
    def one(cls, spec: FieldSpec, order: int) -> "TruncSeries":
        if order < 1:
            raise ValueError("order must be >= 1")
        return cls(spec, (RatFunc.one(spec),) + (RatFunc.zero(spec),) * (order - 1))

    @classmethod
    def identity(cls, spec: FieldSpec, order: int) -> "TruncSeries":
        """The series z + O(z^order)."""
        if order < 2:
            raise ValueError("order must be >= 2 to hold z")
        coeffs = [RatFunc.zero(spec)] * order
        coeffs[1] = RatFunc.one(spec)
        return cls(spec, coeffs)

    @classmethod
    def from_sparse(cls, spec: FieldSpec, order: int, pairs) -> "TruncSeries":
        """Series from (exponent, RatFunc) pairs; absent exponents are zero."""
        coeffs = [RatFunc.zero(spec)] * order
        for exponent, value in pairs:
            if not 0 <= exponent < order:
                raise OrderUnderflow(
                    f"exponent {exponent} outside truncation order {order}"
                )
            coeffs[exponent] = value
        return cls(spec, coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> RatFunc:
        if not 0 <= n < self.order:
            raise OrderUnderflow(
                f"coefficient {n} requested from a series of order {self.order}"
            )
        return self.coeffs[n]

    def _require_same(self, other):
        if not isinstance(other, TruncSeries):
            raise TypeError(f"expected TruncSeries, got {type(other).__name__}")
        if other.spec != self.spec:
            raise MixedFields("series over different fields")

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise OrderUnderflow(
                f"cannot extend order {self.order} series to {order}"
            )
        return TruncSeries(self.spec, self.coeffs[:order])

    def __add__(self, other):
        self._require_same(other)
        n = min(self.order, other.order)
        return TruncSeries(
            self.spec, tuple(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n]))
        )

    def __sub__(self, other):
        self._require_same(other)
        n = min(self.order, other.order)
        return TruncSeries(
            self.spec, tuple(a - b for a, b in zip(self.coeffs[:n], other.coeffs[:n]))
        )

    def __neg__(self):
        return TruncSeries(self.spec, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        self._require_same(other)
        n = min(self.order, other.order)
        zero = RatFunc.zero(self.spec)
        out = [zero] * n
        for i in range(n):
            a = self.coeffs[i]
            if a.is_zero:
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(self.spec, out)

    def scale(self, c) -> "TruncSeries":
        """Multiply every coefficient by a constant (int or FieldElement)."""
        if isinstance(c, int):
            c = self.spec.element(c)
        return TruncSeries(self.spec, tuple(v.scale(c) for v in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.spec == other.spec and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.spec, self.coeffs))

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"

    def __repr__(self):
        return f"TruncSeries(order={self.order}, {self!s})"

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict, spec: FieldSpec) -> "TruncSeries":
        coeffs = [parse_ratfunc(c, spec) for c in obj["coeffs"]]
        if len(coeffs) != obj["order"]:
            raise ValueError("coefficient count does not match declared order")
        return cls(spec, coeffs)


# -- spec-named operations ----------------------------------------------------


def ts_add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Coefficientwise sum, truncated to the smaller order."""
    return a + b


def ts_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product, truncated to the smaller order."""
    return a * b


def ts_invert(f: TruncSeries) -> TruncSeries:
    """Multiplicative inverse: g with f*g = 1 + O(z^order).

    Standard coefficient recursion g_0 = 1/f_0,
    g_n = -(1/f_0) * sum_{i=1..n} f_i g_{n-i}; this is the oracle the
    closed-form methods are tested against.
    """
    if f.order < 1 or f.coeffs[0].is_zero:
        raise NonUnitConstantTerm("series inversion needs a nonzero constant term")
    inv0 = f.coeffs[0].inverse()
    neg_inv0 = -inv0
    out = [inv0]
    for n in range(1, f.order):
        acc = None
        for i in range(1, n + 1):
            fi = f.coeffs[i]
            if fi.is_zero:
                continue
            term = fi * out[n - i]
            acc = term if acc is None else acc + term
        if acc is None:
            out.append(RatFunc.zero(f.spec))
        else:
            out.append(neg_inv0 * acc)
    return TruncSeries(f.spec, out)


def ts_pow(f: TruncSeries, ell: int) -> TruncSeries:
    """ell-fold product of f with itself, truncated to f's order."""
    if ell < 1:
        raise ValueError("power must be >= 1")
    result = f
    for _ in range(ell - 1):
        result = result * f
    return result


def ts_compose(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """f(g(z)) for g with zero constant term, by Horner evaluation."""
    if g.order < 1 or not g.coeffs[0].is_zero:
        raise InnerConstantNonzero("inner series must have zero constant term")
    n = min(f.order, g.order)
    f = f.truncate(n)
    g = g.truncate(n)
    acc = TruncSeries.zero(f.spec, n)
    for k in range(n - 1, -1, -1):
        acc = acc * g
        ck = f.coeffs[k]
        if not ck.is_zero:
            coeffs = list(acc.coeffs)
            coeffs[0] = coeffs[0] + ck
            acc = TruncSeries(f.spec, coeffs)
    return acc


def ht_derivative(f: TruncSeries, m: int, table: BinomTable | None = None) -> TruncSeries:
    """Order-m divided derivative: coefficient of z^(n-m) is f_n * binom(n, m).

    The result order is f.order - m; m = 0 is the identity.
    """
    if m < 0:
        raise ValueError("derivative order must be >= 0")
    if m == 0:
        return f
    if m >= f.order:
        raise OrderUnderflow(
            f"derivative of order {m} underflows a series of order {f.order}"
        )
    if table is None:
        table = BinomTable(f.spec.p)
    out = []
    for n in range(m, f.order):
        c = f.coeffs[n]
        if c.is_zero:
            out.append(c)
            continue
        b = table(n, m)
        if b == 0:
            out.append(RatFunc.zero(f.spec))
        elif b == 1:
            out.append(c)
        else:
            out.append(c.scale(b))
    return TruncSeries(f.spec, out)


def conv_coeff(f: TruncSeries, ell: int, e: int) -> RatFunc:
    """Coefficient of z^e in f^ell, by iterated convolution.

    Equals the sum of lambda_{i_1}*...*lambda_{i_ell} over all ell-tuples of
    nonnegative indices summing to e, without enumerating the tuples.
    """
    if ell < 1:
        raise ValueError("power must be >= 1")
    if e < 0 or e >= f.order:
        raise OrderUnderflow(
            f"coefficient {e} requested from a series of order {f.order}"
        )
    return ts_pow(f.truncate(e + 1), ell)[e]

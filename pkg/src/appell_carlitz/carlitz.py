"""Carlitz quantities over F_r[T] and the exponential / logarithm series.

The building block is the bracket polynomial T^(r^i) - T.  Two factorial-like
products of brackets appear as series denominators:

* exp denominators D: D_0 = 1, D_i = bracket(i) * D_{i-1}^r
  (the coefficient of z^(r^i) in the exponential is 1/D_i);
* log denominators L: L_0 = 1, L_i = bracket(i) * L_{i-1}
  (the coefficient of z^(r^i) in the logarithm is (-1)^i / L_i).

The factorial of n is the product of D_j^(c_j) over the base-r digits c_j of
n.  A CarlitzContext precomputes brackets and both denominator chains up to
an index bound derived from the requested truncation order, and is immutable
afterwards (safe to share across threads).
"""

from __future__ import annotations

from .errors import IndexTooLarge
from .ff import FieldSpec
from .polyring import Poly
from .ratfunc import RatFunc, embed_sign
from .series import TruncSeries


def rdigits(n: int, r: int) -> list[int]:
    """Base-r digits of n, least significant first; empty for 0."""
    if n < 0:
        raise ValueError("digits of a negative integer")
    digits = []
    while n:
        digits.append(n % r)
        n //= r
    return digits


def _index_bound(r: int, max_order: int) -> int:
    # largest j with r^j <= max_order covers every coefficient, reciprocal
    # coefficient and factorial needed by series of that order
    j = 0
    power = r
    while power <= max_order:
        j += 1
        power *= r
    return j


class CarlitzContext:
    """Precomputed brackets and denominator chains for one field.

    ``max_order`` is the largest series truncation order the context must
    serve; the cache bound (the largest usable index) is derived from it, so
    callers never size the caches by hand.
    """

    def __init__(self, spec: FieldSpec, max_order: int = 64):
        if max_order < 1:
            raise ValueError("max_order must be >= 1")
        self.spec = spec
        self.r = spec.r
        self.max_order = max_order
        self.max_index = _index_bound(self.r, max_order)
        brackets = [None]  # index 0 unused
        exp_denoms = [Poly.one(spec)]
        log_denoms = [Poly.one(spec)]
        for i in range(1, self.max_index + 1):
            b = Poly.from_terms(spec, {self.r**i: 1, 1: -1})
            brackets.append(b)
            exp_denoms.append(b * exp_denoms[i - 1] ** self.r)
            log_denoms.append(b * log_denoms[i - 1])
        self._brackets = tuple(brackets)
        self._exp_denoms = tuple(exp_denoms)
        self._log_denoms = tuple(log_denoms)

    def _check_index(self, i: int, smallest: int) -> int:
        if i < smallest:
            raise ValueError(f"index must be >= {smallest}")
        if i > self.max_index:
            raise IndexTooLarge(
                f"index {i} beyond the cache bound {self.max_index} "
                f"(context built for order {self.max_order})"
            )
        return i

    def __repr__(self):
        return f"CarlitzContext(r={self.r}, max_index={self.max_index})"


def bracket(ctx: CarlitzContext, i: int) -> Poly:
    """The polynomial T^(r^i) - T."""
    ctx._check_index(i, 1)
    return ctx._brackets[i]


def carlitz_D(ctx: CarlitzContext, i: int) -> Poly:
    """Exp-denominator chain: D_0 = 1, D_i = bracket(i) * D_{i-1}^r."""
    ctx._check_index(i, 0)
    return ctx._exp_denoms[i]


def carlitz_L(ctx: CarlitzContext, i: int) -> Poly:
    """Log-denominator chain: L_0 = 1, L_i = bracket(i) * L_{i-1}."""
    ctx._check_index(i, 0)
    return ctx._log_denoms[i]


def carlitz_factorial(ctx: CarlitzContext, n: int) -> Poly:
    """Digit-product factorial: product of D_j^(c_j) over base-r digits of n."""
    digits = rdigits(n, ctx.r)
    if len(digits) - 1 > ctx.max_index:
        raise IndexTooLarge(
            f"factorial of {n} needs index {len(digits) - 1}, "
            f"cache bound is {ctx.max_index}"
        )
    result = Poly.one(ctx.spec)
    for j, c in enumerate(digits):
        if c:
            result = result * ctx._exp_denoms[j] ** c
    return result


def carlitz_exp_series(ctx: CarlitzContext, order: int) -> TruncSeries:
    """Truncated exponential: sum of z^(r^j) / D_j, an F_r-linear series."""
    if order < 2:
        raise ValueError("order must be >= 2")
    _require_order(ctx, order)
    pairs = []
    power = 1
    j = 0
    while power < order:
        pairs.append((power, RatFunc._make(Poly.one(ctx.spec), ctx._exp_denoms[j])))
        power *= ctx.r
        j += 1
    return TruncSeries.from_sparse(ctx.spec, order, pairs)


def carlitz_log_series(ctx: CarlitzContext, order: int) -> TruncSeries:
    """Truncated logarithm: sum of (-1)^i z^(r^i) / L_i; inverse of the
    exponential under formal composition."""
    if order < 2:
        raise ValueError("order must be >= 2")
    _require_order(ctx, order)
    pairs = []
    power = 1
    i = 0
    while power < order:
        value = RatFunc._make(Poly.one(ctx.spec), ctx._log_denoms[i]).scale(
            embed_sign(ctx.spec, i)
        )
        pairs.append((power, value))
        power *= ctx.r
        i += 1
    return TruncSeries.from_sparse(ctx.spec, order, pairs)


def lambda_series(ctx: CarlitzContext, family: str, order: int) -> TruncSeries:
    """Reciprocal-series coefficients for a built-in family.

    BC: the exponential divided by z, coefficient 1/D_j at exponent r^j - 1.
    CC: the logarithm divided by z, coefficient (-1)^j / L_j at r^j - 1.
    All other exponents are zero; the constant term is 1.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    _require_order(ctx, order)
    if family not in ("BC", "CC"):
        raise ValueError(f"unknown family {family!r} (expected 'BC' or 'CC')")
    pairs = []
    power = 1
    j = 0
    while power - 1 < order:
        if family == "BC":
            value = RatFunc._make(Poly.one(ctx.spec), ctx._exp_denoms[j])
        else:
            value = RatFunc._make(Poly.one(ctx.spec), ctx._log_denoms[j]).scale(
                embed_sign(ctx.spec, j)
            )
        pairs.append((power - 1, value))
        power *= ctx.r
        j += 1
    return TruncSeries.from_sparse(ctx.spec, order, pairs)


def _require_order(ctx: CarlitzContext, order: int):
    if order > ctx.max_order:
        raise IndexTooLarge(
            f"context built for order {ctx.max_order}, requested {order}"
        )

"""Appell-Carlitz number engine: five independent evaluation methods.

A family is given by the coefficients of the reciprocal of its generating
series (constant term 1).  Writing S for the generating series normalised so
the n-th number is the z^n coefficient of S^ell times the factorial of n, the
methods are:

* inversion    -- invert the reciprocal series directly (the oracle);
* recurrence   -- the coefficient recurrence from reciprocal * series = 1;
* closed       -- a literal signed sum over integer compositions;
* partition    -- a literal signed sum over partitions (order 1 only);
* determinant  -- a lower-Hessenberg determinant, Gaussian elimination.

They share only the convolution table of the reciprocal series; everything
past that is computed along algorithmically independent routes, so exact
agreement across all five is a strong correctness check.  Every method is
pure; distinct calls may run in parallel without coordination.
"""

from __future__ import annotations

from dataclasses import dataclass

from .carlitz import CarlitzContext, carlitz_factorial, lambda_series, rdigits
from .errors import (
    IndexTooLarge,
    IndexTooLargeForLiteralEnumeration,
    MixedFields,
    NormalizationError,
    OrderUnderflow,
)
from .polyring import Poly
from .ratfunc import RatFunc, embed_sign
from .series import TruncSeries, multinomial_mod_p, ts_invert, ts_pow

CLOSED_FORM_CAP = 20  # literal composition enumeration is ~2^(m-1) terms
PARTITION_CAP = 30
DETERMINANT_CAP = 64

METHOD_NAMES = ("closed", "determinant", "inversion", "partition", "recurrence")


@dataclass(frozen=True)
class AppellFamily:
    """A number family: its label, reciprocal-series coefficients, context."""

    label: str
    lam: TruncSeries
    ctx: CarlitzContext

    def __post_init__(self):
        if self.lam.spec != self.ctx.spec:
            raise MixedFields("series and context use different fields")
        if self.lam.order < 1 or not self.lam[0].is_one:
            raise NormalizationError(
                "reciprocal series must have constant term exactly 1"
            )


def bernoulli_carlitz_family(ctx: CarlitzContext, order: int) -> AppellFamily:
    return AppellFamily("BC", lambda_series(ctx, "BC", order), ctx)


def cauchy_carlitz_family(ctx: CarlitzContext, order: int) -> AppellFamily:
    return AppellFamily("CC", lambda_series(ctx, "CC", order), ctx)


def custom_family(ctx: CarlitzContext, lam: TruncSeries, label: str = "custom") -> AppellFamily:
    return AppellFamily(label, lam, ctx)


@dataclass(frozen=True)
class ACResult:
    """One computed number with its provenance."""

    family: str
    r: int
    ell: int
    n: int
    value: RatFunc
    method: str


def _validate(fam: AppellFamily, ell: int, n_max: int):
    if ell < 1:
        raise ValueError("order ell must be >= 1")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if fam.lam.order <= n_max:
        raise OrderUnderflow(
            f"family series order {fam.lam.order} cannot cover n_max {n_max}"
        )


def _conv_table(fam: AppellFamily, ell: int, n_max: int) -> list[RatFunc]:
    """Coefficients of the ell-th power of the reciprocal series, 0..n_max."""
    powered = ts_pow(fam.lam.truncate(n_max + 1), ell)
    return list(powered.coeffs)


def _factorials(ctx: CarlitzContext, n_max: int) -> list[Poly]:
    return [carlitz_factorial(ctx, n) for n in range(n_max + 1)]


def _result(fam, ell, n, value, method) -> ACResult:
    return ACResult(fam.label, fam.ctx.r, ell, n, value, method)


# -- method 1: series inversion (the oracle) ---------------------------------


def ac_inversion(fam: AppellFamily, ell: int, n_max: int) -> list[ACResult]:
    """Invert the ell-th power of the reciprocal series and scale by
    factorials.  This is the oracle the other methods are tested against."""
    _validate(fam, ell, n_max)
    inverted = ts_invert(ts_pow(fam.lam.truncate(n_max + 1), ell))
    out = []
    for n in range(n_max + 1):
        value = inverted[n] * RatFunc.from_poly(carlitz_factorial(fam.ctx, n))
        out.append(_result(fam, ell, n, value, "inversion"))
    return out


# -- method 2: recurrence ------------------------------------------------------


def ac_recurrence(fam: AppellFamily, ell: int, n_max: int) -> list[ACResult]:
    """AC_m = -Pi(m) * sum_{i<m} (AC_i / Pi(i)) * conv(m-i), with AC_0 = 1."""
    _validate(fam, ell, n_max)
    conv = _conv_table(fam, ell, n_max)
    facts = _factorials(fam.ctx, n_max)
    spec = fam.ctx.spec
    scaled = [RatFunc.one(spec)]  # AC_i / Pi(i)
    out = [_result(fam, ell, 0, RatFunc.one(spec), "recurrence")]
    minus_one = embed_sign(spec, 1)
    for m in range(1, n_max + 1):
        acc = RatFunc.zero(spec)
        for i in range(m):
            d = conv[m - i]
            if d.is_zero or scaled[i].is_zero:
                continue
            acc = acc + scaled[i] * d
        s_m = acc.scale(minus_one)
        scaled.append(s_m)
        value = s_m * RatFunc.from_poly(facts[m])
        out.append(_result(fam, ell, m, value, "recurrence"))
    return out


# -- method 3: closed form over compositions ----------------------------------


def _composition_sum(spec, table: list[tuple[int, RatFunc]], m: int) -> RatFunc:
    """sum over compositions of m into parts with nonzero table entries of
    (-1)^(part count) * product of entries, by literal depth-first
    enumeration with a running product (zero parts are pruned since any
    composition through them contributes nothing)."""
    acc = [RatFunc.zero(spec)]
    plus = spec.one()
    minus = embed_sign(spec, 1)

    def descend(remaining: int, product: RatFunc, sign_odd: bool):
        for e, value in table:
            if e > remaining:
                break
            extended = product * value
            if e == remaining:
                acc[0] = acc[0] + extended.scale(minus if sign_odd else plus)
            else:
                descend(remaining - e, extended, not sign_odd)

    descend(m, RatFunc.one(spec), True)
    return acc[0]


def ac_closed(fam: AppellFamily, ell: int, m: int) -> ACResult:
    """Literal composition sum:
    AC_m = Pi(m) * sum_k (-1)^k * sum over k-part compositions of m of the
    product of convolution coefficients."""
    if m < 1:
        raise ValueError("closed form is defined for m >= 1")
    if m > CLOSED_FORM_CAP:
        raise IndexTooLargeForLiteralEnumeration(
            f"m = {m} exceeds the literal-enumeration cap {CLOSED_FORM_CAP}"
        )
    _validate(fam, ell, m)
    conv = _conv_table(fam, ell, m)
    table = [(e, conv[e]) for e in range(1, m + 1) if not conv[e].is_zero]
    total = _composition_sum(fam.ctx.spec, table, m)
    value = total * RatFunc.from_poly(carlitz_factorial(fam.ctx, m))
    return _result(fam, ell, m, value, "closed")


# -- method 4: partition sum (order 1) ----------------------------------------


def ac_partition(fam: AppellFamily, m: int) -> ACResult:
    """Literal partition sum (order 1 only):
    AC_m = Pi(m) * sum_j (-1)^j * sum over multiplicity vectors
    (i_1..i_m) with sum t*i_t = m and sum i_t = j of the multinomial
    (j; i_1..i_m) mod p times the product of coefficient powers."""
    if m < 1:
        raise ValueError("partition form is defined for m >= 1")
    if m > PARTITION_CAP:
        raise IndexTooLarge(f"m = {m} exceeds the partition cap {PARTITION_CAP}")
    _validate(fam, 1, m)
    spec = fam.ctx.spec
    lam = fam.lam
    parts = [e for e in range(1, m + 1) if not lam[e].is_zero]
    acc = [RatFunc.zero(spec)]

    def descend(idx: int, remaining: int, mults: list[int]):
        if remaining == 0:
            j = sum(mults)
            coeff = multinomial_mod_p(mults, spec.p)
            if coeff == 0:
                return
            term = RatFunc.one(spec)
            for part, i in zip(parts, mults):
                if i:
                    term = term * lam[part] ** i
            acc[0] = acc[0] + term.scale(spec.element(coeff) * embed_sign(spec, j))
            return
        if idx == len(parts):
            return
        part = parts[idx]
        for i in range(remaining // part + 1):
            descend(idx + 1, remaining - i * part, mults + [i])

    descend(0, m, [])
    value = acc[0] * RatFunc.from_poly(carlitz_factorial(fam.ctx, m))
    return _result(fam, 1, m, value, "partition")


# -- method 5: Hessenberg determinant ------------------------------------------


def _det_gauss(rows: list[list[RatFunc]], spec) -> RatFunc:
    """Determinant by Gaussian elimination with row pivoting over F_r(T).

    Zero entries in the pivot row are skipped during elimination, which keeps
    the Hessenberg case near O(m^2); a fully zero column short-circuits to 0.
    """
    n = len(rows)
    sign_flips = 0
    det = RatFunc.one(spec)
    for col in range(n):
        pivot_row = None
        for i in range(col, n):
            if not rows[i][col].is_zero:
                pivot_row = i
                break
        if pivot_row is None:
            return RatFunc.zero(spec)
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            sign_flips += 1
        pivot = rows[col][col]
        det = det * pivot
        for i in range(col + 1, n):
            lead = rows[i][col]
            if lead.is_zero:
                continue
            factor = lead / pivot
            target = rows[i]
            source = rows[col]
            target[col] = RatFunc.zero(spec)
            for k in range(col + 1, n):
                s = source[k]
                if not s.is_zero:
                    target[k] = target[k] - factor * s
    if sign_flips % 2:
        det = det.scale(embed_sign(spec, 1))
    return det


def ac_determinant(fam: AppellFamily, ell: int, m: int) -> ACResult:
    """Determinant form: (-1)^m Pi(m) times the determinant of the m x m
    lower-Hessenberg Toeplitz matrix with first column conv(1..m) and unit
    superdiagonal."""
    if m < 1:
        raise ValueError("determinant form is defined for m >= 1")
    if m > DETERMINANT_CAP:
        raise IndexTooLarge(f"m = {m} exceeds the determinant cap {DETERMINANT_CAP}")
    _validate(fam, ell, m)
    spec = fam.ctx.spec
    conv = _conv_table(fam, ell, m)
    zero = RatFunc.zero(spec)
    one = RatFunc.one(spec)
    rows = []
    for i in range(m):
        row = []
        for j in range(m):
            if i >= j:
                row.append(conv[i - j + 1])
            elif j == i + 1:
                row.append(one)
            else:
                row.append(zero)
        rows.append(row)
    det = _det_gauss(rows, spec)
    value = (
        det
        * RatFunc.from_poly(carlitz_factorial(fam.ctx, m))
    ).scale(embed_sign(spec, m))
    return _result(fam, ell, m, value, "determinant")


# -- independent cross-checks ---------------------------------------------------


def bc_native_recurrence(ctx: CarlitzContext, n_max: int) -> list[ACResult]:
    """Sparse recurrence special to the Bernoulli-Carlitz family, summing
    over r-powers only:
    BC_n = -sum_{j=1..floor(log_r(n+1))} Pi(n) / (Pi(r^j) Pi(n+1-r^j))
    * BC_{n+1-r^j}.  Implemented independently of the generic engine."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    spec = ctx.spec
    facts = _factorials(ctx, n_max)
    minus_one = embed_sign(spec, 1)
    values = [RatFunc.one(spec)]
    out = [ACResult("BC", ctx.r, 1, 0, values[0], "native-recurrence")]
    for n in range(1, n_max + 1):
        acc = RatFunc.zero(spec)
        power = ctx.r
        while power <= n + 1:
            back = values[n + 1 - power]
            if not back.is_zero:
                pi_power = (
                    facts[power] if power <= n_max else carlitz_factorial(ctx, power)
                )
                ratio = RatFunc(facts[n], pi_power * facts[n + 1 - power])
                acc = acc + ratio * back
            power *= ctx.r
        value = acc.scale(minus_one)
        values.append(value)
        out.append(ACResult("BC", ctx.r, 1, n, value, "native-recurrence"))
    return out


def m_ell(family: str, ctx: CarlitzContext, ell: int, i: int) -> RatFunc:
    """Sum over ordered ell-tuples of r-power exponents with powers summing
    to i: reciprocal products of exp-denominator factorials (BC) or signed
    reciprocal log-denominator products (CC).  Empty sums give 0."""
    if family not in ("BC", "CC"):
        raise ValueError(f"unknown family {family!r}")
    if ell < 1:
        raise ValueError("order ell must be >= 1")
    if i < 1:
        raise ValueError("index must be >= 1")
    spec = ctx.spec
    if ctx.r ** (ctx.max_index + 1) <= i:
        raise IndexTooLarge(
            f"tuple sum at {i} needs r-powers beyond the cache bound "
            f"{ctx.max_index} (context built for order {ctx.max_order})"
        )
    denoms = ctx._exp_denoms if family == "BC" else ctx._log_denoms
    acc = [RatFunc.zero(spec)]
    one = Poly.one(spec)

    def descend(slots: int, remaining: int, den: Poly, expsum: int):
        if slots == 0:
            if remaining == 0:
                term = RatFunc._make(one, den)
                if family == "CC":
                    term = term.scale(embed_sign(spec, expsum))
                acc[0] = acc[0] + term
            return
        # each remaining slot needs at least r^0 = 1
        budget = remaining - (slots - 1)
        power = 1
        e = 0
        while power <= budget:
            descend(slots - 1, remaining - power, den * denoms[e], expsum + e)
            power *= ctx.r
            e += 1

    descend(ell, i, one, 0)
    return acc[0]


def ac_corollary_closed(family: str, ctx: CarlitzContext, ell: int, m: int) -> ACResult:
    """Closed form for the built-in families written through the r-power
    tuple sums: the convolution coefficient at e equals the tuple sum at
    e + ell, so the composition sum of ac_closed is evaluated with factors
    taken from :func:`m_ell` instead of the series convolution."""
    if m < 1:
        raise ValueError("corollary form is defined for m >= 1")
    if m > CLOSED_FORM_CAP:
        raise IndexTooLargeForLiteralEnumeration(
            f"m = {m} exceeds the literal-enumeration cap {CLOSED_FORM_CAP}"
        )
    spec = ctx.spec
    table = []
    for e in range(1, m + 1):
        value = m_ell(family, ctx, ell, e + ell)
        if not value.is_zero:
            table.append((e, value))
    total = _composition_sum(spec, table, m)
    value = total * RatFunc.from_poly(carlitz_factorial(ctx, m))
    return ACResult(family, ctx.r, ell, m, value, "corollary")


# -- method dispatch (used by the CLI and the acceptance suite) -----------------


def compute_method(fam: AppellFamily, ell: int, n_max: int, method: str) -> list[ACResult]:
    """Full table n = 0..n_max for one method; n = 0 is the normalisation 1."""
    if method == "inversion":
        return ac_inversion(fam, ell, n_max)
    if method == "recurrence":
        return ac_recurrence(fam, ell, n_max)
    if method not in METHOD_NAMES:
        raise ValueError(f"unknown method {method!r}")
    if method == "partition" and ell != 1:
        raise ValueError("the partition method is defined for ell = 1 only")
    _validate(fam, ell, n_max)
    out = [_result(fam, ell, 0, RatFunc.one(fam.ctx.spec), method)]
    for m in range(1, n_max + 1):
        if method == "closed":
            out.append(ac_closed(fam, ell, m))
        elif method == "partition":
            out.append(ac_partition(fam, m))
        else:
            out.append(ac_determinant(fam, ell, m))
    return out

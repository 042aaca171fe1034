"""Exact arithmetic in finite fields F_r with r = p^e.

Prime fields need only the characteristic; extension fields are defined by an
explicit monic irreducible modulus over F_p, supplied by the caller and
validated here (the library never generates moduli, so field definitions stay
reproducible).  Elements are immutable coordinate vectors in the power basis
of the generator and may be shared freely across threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import product

import numpy as np

from .errors import (
    DivisionByZero,
    ExponentOverflow,
    MixedFields,
    ModulusDegreeMismatch,
    NonPrimeCharacteristic,
    ParseError,
    ReducibleModulus,
)

_MAX_CHARACTERISTIC = 2**31  # keeps products of residues inside int64


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# -- tiny dense F_p[x] helpers (python lists, ascending), used only for
#    modulus validation and element inversion; degrees here never exceed e.


def _pm_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pm_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, av in enumerate(a):
        if av:
            for j, bv in enumerate(b):
                out[i + j] = (out[i + j] + av * bv) % p
    return _pm_trim(out)


def _pm_mod(a, f, p):
    a = list(a)
    df = len(f) - 1
    flead_inv = pow(f[-1], -1, p)
    while len(a) - 1 >= df and a:
        if a[-1]:
            q = (a[-1] * flead_inv) % p
            sh = len(a) - 1 - df
            for t in range(df + 1):
                a[sh + t] = (a[sh + t] - q * f[t]) % p
        a.pop()
    return _pm_trim(a)


def _pm_gcd(a, b, p):
    a, b = _pm_trim(list(a)), _pm_trim(list(b))
    while b:
        a, b = b, _pm_mod(a, b, p)
    return a


def _pm_powmod(base, exponent, f, p):
    result = [1]
    base = _pm_mod(base, f, p)
    while exponent:
        if exponent & 1:
            result = _pm_mod(_pm_mul(result, base, p), f, p)
        base = _pm_mod(_pm_mul(base, base, p), f, p)
        exponent >>= 1
    return result


def _check_irreducible(modulus, p, e):
    # an irreducible witness: no factor of degree <= e/2, tested via
    # gcd(f, x^(p^k) - x) for k = 1..e//2
    f = list(modulus)
    t = [0, 1]  # x
    for _ in range(e // 2):
        t = _pm_powmod(t, p, f, p)
        diff = list(t) + [0] * max(0, 2 - len(t))
        diff[1] = (diff[1] - 1) % p
        g = _pm_gcd(f, diff, p)
        if len(g) - 1 > 0:
            raise ReducibleModulus(
                f"modulus has an irreducible factor of degree {len(g) - 1}"
            )


@dataclass(frozen=True)
class FieldSpec:
    """Immutable description of F_{p^e}; build via :func:`field_make`."""

    p: int
    e: int
    modulus: tuple[int, ...] | None = None

    @property
    def r(self) -> int:
        return self.p**self.e

    @cached_property
    def mod_array(self) -> np.ndarray:
        # kernel-side modulus; a placeholder for prime fields where no
        # reduction ever happens
        if self.e == 1:
            return np.array([0, 1], dtype=np.int64)
        return np.array(self.modulus, dtype=np.int64)

    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.e)

    def one(self) -> "FieldElement":
        return FieldElement(self, (1,) + (0,) * (self.e - 1))

    def element(self, coords) -> "FieldElement":
        if isinstance(coords, int):
            return integer_embed(coords, self)
        coords = tuple(int(c) % self.p for c in coords)
        if len(coords) != self.e:
            raise ValueError(f"expected {self.e} coordinates, got {len(coords)}")
        return FieldElement(self, coords)

    def __repr__(self):
        if self.e == 1:
            return f"FieldSpec(p={self.p})"
        return f"FieldSpec(p={self.p}, e={self.e}, modulus={format_modulus(self)!r})"


def field_make(p: int, e: int = 1, modulus=None) -> FieldSpec:
    """Validated field spec for F_{p^e}.

    ``modulus`` (required iff e >= 2) is the monic irreducible degree-e
    polynomial over F_p defining the extension, given either as a coefficient
    sequence in ascending powers of x or as text like "x^2+x+1".
    """
    p = int(p)
    e = int(e)
    if p >= _MAX_CHARACTERISTIC:
        raise ExponentOverflow("characteristic must stay below 2^31")
    if not _is_prime(p):
        raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    if e == 1:
        if modulus is not None:
            raise ModulusDegreeMismatch("prime fields take no modulus")
        return FieldSpec(p, 1, None)
    if modulus is None:
        raise ModulusDegreeMismatch(f"extension of degree {e} needs a modulus")
    if isinstance(modulus, str):
        coeffs = _parse_xpoly(modulus, p)
    else:
        coeffs = [int(c) % p for c in modulus]
    coeffs = _pm_trim(list(coeffs))
    if len(coeffs) - 1 != e:
        raise ModulusDegreeMismatch(
            f"modulus has degree {len(coeffs) - 1}, expected {e}"
        )
    if coeffs[-1] != 1:
        raise ModulusDegreeMismatch("modulus must be monic")
    _check_irreducible(coeffs, p, e)
    return FieldSpec(p, e, tuple(coeffs))


@dataclass(frozen=True)
class FieldElement:
    """One element of F_{p^e}: an immutable coordinate vector over F_p."""

    spec: FieldSpec
    coords: tuple[int, ...]

    def _require_same(self, other):
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.spec != self.spec:
            raise MixedFields(f"operands from {self.spec} and {other.spec}")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        self._require_same(other)
        p = self.spec.p
        return FieldElement(
            self.spec, tuple((a + b) % p for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other):
        self._require_same(other)
        p = self.spec.p
        return FieldElement(
            self.spec, tuple((a - b) % p for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self):
        p = self.spec.p
        return FieldElement(self.spec, tuple((-a) % p for a in self.coords))

    def __mul__(self, other):
        self._require_same(other)
        spec = self.spec
        p = spec.p
        if spec.e == 1:
            return FieldElement(spec, ((self.coords[0] * other.coords[0]) % p,))
        prod = _pm_mul(list(self.coords), list(other.coords), p)
        red = _pm_mod(prod, list(spec.modulus), p)
        red += [0] * (spec.e - len(red))
        return FieldElement(spec, tuple(red))

    def inverse(self) -> "FieldElement":
        spec = self.spec
        p = spec.p
        if self.is_zero():
            raise DivisionByZero("zero has no inverse")
        if spec.e == 1:
            return FieldElement(spec, (pow(self.coords[0], -1, p),))
        # extended Euclid against the modulus
        r0, r1 = list(spec.modulus), _pm_trim(list(self.coords))
        t0, t1 = [], [1]
        while len(r1) - 1 > 0:
            # one full reduction step r0 mod r1, mirrored on t0
            q_shift_terms = []
            df = len(r1) - 1
            lead_inv = pow(r1[-1], -1, p)
            a = list(r0)
            while len(a) - 1 >= df and a:
                if a[-1]:
                    q = (a[-1] * lead_inv) % p
                    sh = len(a) - 1 - df
                    q_shift_terms.append((q, sh))
                    for t in range(df + 1):
                        a[sh + t] = (a[sh + t] - q * r1[t]) % p
                a.pop()
            _pm_trim(a)
            for q, sh in q_shift_terms:
                qk = [0] * sh + [q]
                t0 = _pm_sub(t0, _pm_mul(qk, t1, p), p)
            r0, r1 = r1, a
            t0, t1 = t1, t0
        g_inv = pow(r1[0], -1, p)
        inv = [(c * g_inv) % p for c in t1]
        inv += [0] * (spec.e - len(inv))
        return FieldElement(spec, tuple(inv[: spec.e]))

    def __truediv__(self, other):
        self._require_same(other)
        return self * other.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.spec.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def to_array(self) -> np.ndarray:
        return np.array(self.coords, dtype=np.int64)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"<{format_element(self)} in F_{self.spec.r}>"


def _pm_sub(a, b, p):
    out = [0] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] = v
    for i, v in enumerate(b):
        out[i] = (out[i] - v) % p
    return _pm_trim(out)


def field_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Dispatch one exact field operation; op in {add, sub, mul, div}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.is_zero():
            raise DivisionByZero("division by zero field element")
        return a / b
    raise ValueError(f"unknown op {op!r}")


def integer_embed(n: int, spec: FieldSpec) -> FieldElement:
    """Image of the integer n in the prime subfield (carries signs like (-1)^m)."""
    return FieldElement(spec, (n % spec.p,) + (0,) * (spec.e - 1))


def elements(spec: FieldSpec):
    """Iterate all r field elements (small fields only; used by tests)."""
    for coords in product(range(spec.p), repeat=spec.e):
        yield FieldElement(spec, coords)


# -- text form -------------------------------------------------------------
#
# prime fields: the residue, e.g. "2"
# extensions:   ascending powers with zero terms omitted, e.g. "1+x" or
#               "2*x^2"; the zero element is "0".  Round-trips bit-exactly.

_TERM_RE = re.compile(r"^(?:(\d+)\*)?x(?:\^(\d+))?$|^(\d+)$")


def format_element(a: FieldElement) -> str:
    spec = a.spec
    if spec.e == 1:
        return str(a.coords[0])
    parts = []
    for t, c in enumerate(a.coords):
        if c == 0:
            continue
        if t == 0:
            parts.append(str(c))
        else:
            power = "x" if t == 1 else f"x^{t}"
            parts.append(power if c == 1 else f"{c}*{power}")
    return "+".join(parts) if parts else "0"


def _parse_xpoly(text: str, p: int):
    """Coefficient list (ascending) from element text; used for moduli too."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty field element")
    coeffs: dict[int, int] = {}
    for chunk in s.split("+"):
        m = _TERM_RE.match(chunk)
        if not m:
            raise ParseError(f"bad field element term {chunk!r}")
        if m.group(3) is not None:
            power, coeff = 0, int(m.group(3))
        else:
            power = int(m.group(2)) if m.group(2) is not None else 1
            coeff = int(m.group(1)) if m.group(1) is not None else 1
        if power in coeffs:
            raise ParseError(f"duplicate power x^{power} in {text!r}")
        coeffs[power] = coeff % p
    top = max(coeffs)
    out = [0] * (top + 1)
    for power, coeff in coeffs.items():
        out[power] = coeff
    return out


def parse_element(text: str, spec: FieldSpec) -> FieldElement:
    coeffs = _parse_xpoly(text, spec.p)
    if len(coeffs) > spec.e:
        raise ParseError(
            f"element text {text!r} has degree {len(coeffs) - 1}, field degree is {spec.e}"
        )
    coeffs += [0] * (spec.e - len(coeffs))
    return FieldElement(spec, tuple(coeffs))


def format_modulus(spec: FieldSpec) -> str:
    """Modulus as x-polynomial text, descending powers (e.g. 'x^2+x+1')."""
    if spec.modulus is None:
        return ""
    parts = []
    for t in range(len(spec.modulus) - 1, -1, -1):
        c = spec.modulus[t]
        if c == 0:
            continue
        if t == 0:
            parts.append(str(c))
        else:
            power = "x" if t == 1 else f"x^{t}"
            parts.append(power if c == 1 else f"{c}*{power}")
    return "+".join(parts)

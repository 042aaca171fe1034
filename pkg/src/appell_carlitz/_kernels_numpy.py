"""Pure-numpy fallback for the polynomial kernels.

Same contracts and array layout as ``_kernels_numba``; used when numba is
unavailable or when APPELL_CARLITZ_BACKEND=numpy is set.  The inner loops are
vectorised per coefficient row instead of jitted, so this path is correct but
noticeably slower on large inputs (see benchmarks/compare_backends.py).
"""

import numpy as np


def _int_inv(a, p):
    return pow(int(a), -1, int(p))


def _xconv(a_row, b, p):
    # product of one field element with every coefficient of b, before
    # reduction by the modulus; result has width 2e-1
    nb, e = b.shape
    wide = np.zeros((nb, 2 * e - 1), np.int64)
    for s in range(e):
        v = int(a_row[s])
        if v:
            wide[:, s : s + e] = (wide[:, s : s + e] + v * b) % p
    return wide


def _xreduce(wide, p, mod):
    # fold x-degrees >= e back below e using the monic modulus
    e = (wide.shape[1] + 1) // 2
    for d in range(wide.shape[1] - 1, e - 1, -1):
        col = wide[:, d].copy()
        if col.any():
            wide[:, d] = 0
            for t in range(e):
                if mod[t]:
                    wide[:, d - e + t] = (wide[:, d - e + t] - col * int(mod[t])) % p
    return wide[:, :e]


def elem_inv(c, p, mod):
    """Inverse of a nonzero field element (length-e coordinate vector)."""
    e = c.shape[0]
    p = int(p)
    if e == 1:
        return np.array([_int_inv(c[0], p)], np.int64)
    r0 = [int(v) for v in mod]
    r1 = [int(v) for v in c] + [0]
    t0 = [0] * (e + 1)
    t1 = [1] + [0] * e

    def deg(v):
        for d in range(len(v) - 1, -1, -1):
            if v[d]:
                return d
        return -1

    d1 = deg(r1)
    while d1 > 0:
        d0 = deg(r0)
        while d0 >= d1:
            f = (r0[d0] * _int_inv(r1[d1], p)) % p
            sh = d0 - d1
            for t in range(d1 + 1):
                r0[t + sh] = (r0[t + sh] - f * r1[t]) % p
            for t in range(e + 1 - sh):
                t0[t + sh] = (t0[t + sh] - f * t1[t]) % p
            d0 = deg(r0)
        r0, r1 = r1, r0
        t0, t1 = t1, t0
        d1 = deg(r1)
    g = _int_inv(r1[0], p)
    return np.array([(t1[t] * g) % p for t in range(e)], np.int64)


def poly_mul(a, b, p, mod):
    """Schoolbook product; shape (na+nb-1, e)."""
    na, e = a.shape
    nb = b.shape[0]
    p = int(p)
    if nb < na:  # iterate over the shorter operand
        a, b = b, a
        na, nb = nb, na
    if e == 1:
        out = np.zeros((na + nb - 1, 1), np.int64)
        bcol = b[:, 0]
        for i in range(na):
            v = int(a[i, 0])
            if v:
                out[i : i + nb, 0] = (out[i : i + nb, 0] + v * bcol) % p
        return out
    wide = np.zeros((na + nb - 1, 2 * e - 1), np.int64)
    for i in range(na):
        if a[i].any():
            wide[i : i + nb] = (wide[i : i + nb] + _xconv(a[i], b, p)) % p
    return np.ascontiguousarray(_xreduce(wide, p, mod))


def poly_divmod(a, b, p, mod):
    """Euclidean division; same contract as the numba kernel."""
    na, e = a.shape
    nb = b.shape[0]
    p = int(p)
    q = np.zeros((na - nb + 1, e), np.int64)
    rem = a.copy()
    linv = elem_inv(b[nb - 1], p, mod)
    if e == 1:
        li = int(linv[0])
        bcol = b[:, 0]
        for k in range(na - nb, -1, -1):
            lead = int(rem[k + nb - 1, 0])
            if lead == 0:
                continue
            f = (lead * li) % p
            q[k, 0] = f
            rem[k : k + nb, 0] = (rem[k : k + nb, 0] - f * bcol) % p
        return q, rem[: nb - 1].copy()
    for k in range(na - nb, -1, -1):
        if not rem[k + nb - 1].any():
            continue
        fac = _xreduce(_xconv(rem[k + nb - 1], linv[None, :], p), p, mod)[0]
        q[k] = fac
        rem[k : k + nb] = (rem[k : k + nb] - _xreduce(_xconv(fac, b, p), p, mod)) % p
    return q, rem[: nb - 1].copy()


def _trim(a):
    n = a.shape[0]
    while n > 0 and not a[n - 1].any():
        n -= 1
    return a[:n]


def poly_gcd(a, b, p, mod):
    """Euclidean gcd, nonempty inputs; result is trimmed but not monic."""
    x = _trim(a.copy())
    y = _trim(b.copy())
    while y.shape[0] > 0:
        if x.shape[0] < y.shape[0]:
            x, y = y, x
            continue
        _, r = poly_divmod(x, y, p, mod)
        x, y = y, _trim(r)
    return np.ascontiguousarray(x)


def poly_scale(a, c, p, mod):
    """Multiply every coefficient by the field element c."""
    n, e = a.shape
    p = int(p)
    if e == 1:
        return np.ascontiguousarray((a * int(c[0])) % p)
    if n == 0:
        return a.copy()
    return np.ascontiguousarray(_xreduce(_xconv(c, a, p), p, mod))

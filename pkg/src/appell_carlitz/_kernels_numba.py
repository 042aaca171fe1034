"""Numba-jitted polynomial kernels over F_p and F_{p^e}.

A polynomial over F_{p^e} is an int64 array of shape (n, e): row k holds the
coordinates of the T^k coefficient in the power basis x^0..x^{e-1} of the
extension generator.  ``mod`` is the monic degree-e modulus over F_p as an
int64 array of length e+1 (ascending powers of x); it is ignored when e == 1.

All kernels assume 2 <= p < 2^31 so that every intermediate product fits in
int64.  Inputs must be nonempty (the pure-Python wrappers handle zero
polynomials); outputs may carry leading zero rows, which the wrappers trim.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _int_inv(a, p):
    # extended Euclid; 0 < a < p, p prime
    t, newt = 0, 1
    r, newr = p, a
    while newr != 0:
        q = r // newr
        t, newt = newt, t - q * newt
        r, newr = newr, r - q * newr
    if t < 0:
        t += p
    return t


@njit(cache=True)
def _elem_addmul(out, a, b, scratch, p, mod, sign):
    # out += sign * (a*b mod modulus), coordinatewise mod p; sign is +1 or -1
    e = a.shape[0]
    for t in range(2 * e - 1):
        scratch[t] = 0
    for s in range(e):
        av = a[s]
        if av != 0:
            for t in range(e):
                bv = b[t]
                if bv != 0:
                    scratch[s + t] = (scratch[s + t] + av * bv) % p
    for d in range(2 * e - 2, e - 1, -1):
        c = scratch[d]
        if c != 0:
            scratch[d] = 0
            for t in range(e):
                mt = mod[t]
                if mt != 0:
                    scratch[d - e + t] = (scratch[d - e + t] - c * mt) % p
    for t in range(e):
        out[t] = (out[t] + sign * scratch[t]) % p


@njit(cache=True)
def _row_nonzero(a, i):
    for s in range(a.shape[1]):
        if a[i, s] != 0:
            return True
    return False


@njit(cache=True)
def elem_inv(c, p, mod):
    """Inverse of a nonzero field element (length-e coordinate vector)."""
    e = c.shape[0]
    out = np.zeros(e, np.int64)
    if e == 1:
        out[0] = _int_inv(c[0], p)
        return out
    # extended Euclid in F_p[x] against the irreducible modulus; since the
    # modulus is irreducible the gcd is a nonzero constant, so the remainder
    # chain always reaches degree 0 before vanishing.
    r0 = np.zeros(e + 1, np.int64)
    r1 = np.zeros(e + 1, np.int64)
    for t in range(e + 1):
        r0[t] = mod[t]
    for t in range(e):
        r1[t] = c[t]
    t0 = np.zeros(e + 1, np.int64)
    t1 = np.zeros(e + 1, np.int64)
    t1[0] = 1
    d0 = e
    d1 = e - 1
    while d1 > 0 and r1[d1] == 0:
        d1 -= 1
    while d1 > 0:
        # reduce r0 modulo r1, mirroring the row operations on t0
        while d0 >= d1:
            lead = r0[d0]
            if lead != 0:
                f = (lead * _int_inv(r1[d1], p)) % p
                sh = d0 - d1
                for t in range(d1 + 1):
                    r0[t + sh] = (r0[t + sh] - f * r1[t]) % p
                for t in range(e + 1 - sh):
                    t0[t + sh] = (t0[t + sh] - f * t1[t]) % p
            d0 -= 1
        tmp = r0
        r0 = r1
        r1 = tmp
        tmp = t0
        t0 = t1
        t1 = tmp
        d0 = d1
        d1 = d1 - 1
        while d1 > 0 and r1[d1] == 0:
            d1 -= 1
    g = _int_inv(r1[0], p)
    for t in range(e):
        out[t] = (t1[t] * g) % p
    return out


@njit(cache=True)
def poly_mul(a, b, p, mod):
    """Schoolbook product; shape (na+nb-1, e)."""
    na = a.shape[0]
    nb = b.shape[0]
    e = a.shape[1]
    out = np.zeros((na + nb - 1, e), np.int64)
    if e == 1:
        for i in range(na):
            av = a[i, 0]
            if av == 0:
                continue
            for j in range(nb):
                bv = b[j, 0]
                if bv != 0:
                    out[i + j, 0] = (out[i + j, 0] + av * bv) % p
    else:
        scratch = np.empty(2 * e - 1, np.int64)
        for i in range(na):
            if not _row_nonzero(a, i):
                continue
            for j in range(nb):
                if _row_nonzero(b, j):
                    _elem_addmul(out[i + j], a[i], b[j], scratch, p, mod, 1)
    return out


@njit(cache=True)
def poly_divmod(a, b, p, mod):
    """Euclidean division; needs na >= nb >= 1 and a true leading row in b.

    Returns (q, r) with q of shape (na-nb+1, e) and r of shape (nb-1, e);
    r is zero-padded up to degree nb-2.
    """
    na = a.shape[0]
    nb = b.shape[0]
    e = a.shape[1]
    q = np.zeros((na - nb + 1, e), np.int64)
    rem = a.copy()
    linv = elem_inv(b[nb - 1], p, mod)
    if e == 1:
        li = linv[0]
        for k in range(na - nb, -1, -1):
            lead = rem[k + nb - 1, 0]
            if lead == 0:
                continue
            f = (lead * li) % p
            q[k, 0] = f
            for j in range(nb):
                bv = b[j, 0]
                if bv != 0:
                    rem[k + j, 0] = (rem[k + j, 0] - f * bv) % p
    else:
        scratch = np.empty(2 * e - 1, np.int64)
        fac = np.empty(e, np.int64)
        for k in range(na - nb, -1, -1):
            if not _row_nonzero(rem, k + nb - 1):
                continue
            for t in range(e):
                fac[t] = 0
            _elem_addmul(fac, rem[k + nb - 1], linv, scratch, p, mod, 1)
            for t in range(e):
                q[k, t] = fac[t]
            for j in range(nb):
                if _row_nonzero(b, j):
                    _elem_addmul(rem[k + j], fac, b[j], scratch, p, mod, -1)
    return q, rem[: nb - 1].copy()


@njit(cache=True)
def _trim_len(a):
    n = a.shape[0]
    while n > 0:
        nz = False
        for s in range(a.shape[1]):
            if a[n - 1, s] != 0:
                nz = True
                break
        if nz:
            break
        n -= 1
    return n


@njit(cache=True)
def poly_gcd(a, b, p, mod):
    """Euclidean gcd, nonempty inputs; result is trimmed but not monic."""
    x = a.copy()
    y = b.copy()
    nx = _trim_len(x)
    ny = _trim_len(y)
    while ny > 0:
        if nx < ny:
            tmp = x
            x = y
            y = tmp
            ntmp = nx
            nx = ny
            ny = ntmp
            continue
        _, r = poly_divmod(x[:nx], y[:ny], p, mod)
        x = y
        nx = ny
        y = r
        ny = _trim_len(r)
    return x[:nx].copy()


@njit(cache=True)
def poly_scale(a, c, p, mod):
    """Multiply every coefficient by the field element c."""
    n = a.shape[0]
    e = a.shape[1]
    out = np.zeros((n, e), np.int64)
    if e == 1:
        cv = c[0]
        for i in range(n):
            out[i, 0] = (a[i, 0] * cv) % p
    else:
        scratch = np.empty(2 * e - 1, np.int64)
        for i in range(n):
            if _row_nonzero(a, i):
                _elem_addmul(out[i], a[i], c, scratch, p, mod, 1)
    return out

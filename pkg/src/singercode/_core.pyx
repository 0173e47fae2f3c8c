# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels, 64-bit fast path.

Same surface as ``_core_py`` but restricted to v <= 63 (field ops) and
64-bit rows; ``singercode.backend`` routes wider inputs to the pure module.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t, int64_t


cdef inline uint64_t _mul(uint64_t a, uint64_t b, uint64_t modulus, int v) nogil:
    cdef uint64_t r = 0
    cdef uint64_t top = (<uint64_t>1) << v
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= modulus
    return r


cdef inline uint64_t _pow(uint64_t a, uint64_t e, uint64_t modulus, int v) nogil:
    cdef uint64_t r = 1
    cdef uint64_t base = a
    while e:
        if e & 1:
            r = _mul(r, base, modulus, v)
        base = _mul(base, base, modulus, v)
        e >>= 1
    return r


cdef inline int _lead(uint64_t x) nogil:
    cdef int h = 0
    while x > 1:
        x >>= 1
        h += 1
    return h


cdef int _rref(uint64_t *rows, int n) nogil:
    """In-place reduce to canonical form; returns the rank.

    On return rows[0..rank) hold the canonical rows in decreasing order.
    """
    cdef int nb = 0
    cdef int i, j, p
    cdef uint64_t x, y
    for i in range(n):
        x = rows[i]
        for j in range(nb):
            y = x ^ rows[j]
            if y < x:
                x = y
        if x:
            p = nb
            while p > 0 and rows[p - 1] < x:
                rows[p] = rows[p - 1]
                p -= 1
            rows[p] = x
            nb += 1
    # back-substitute: clear lower pivots from higher rows
    for i in range(nb):
        x = rows[i]
        for j in range(i + 1, nb):
            if (x >> _lead(rows[j])) & 1:
                x ^= rows[j]
        rows[i] = x
    return nb


def gf_mul(a, b, modulus, v):
    """Carry-less multiply modulo a degree-v polynomial."""
    return _mul(a, b, modulus, v)


def gf_pow(a, e, modulus, v):
    """a**e by square-and-multiply; e must be >= 0."""
    return _pow(a, e, modulus, v)


def gf_inv(a, modulus, v):
    """Multiplicative inverse via a**(2^v - 2); a must be nonzero."""
    cdef int vv = v
    return _pow(a, (((<uint64_t>1) << vv) - 2), modulus, vv)


def rref(rows):
    """Canonical reduced form of the span of ``rows`` (decreasing ints)."""
    cdef int n = len(rows)
    if n > 128:
        raise ValueError("too many rows for the compiled kernel")
    cdef uint64_t buf[128]
    cdef int i, nb
    for i in range(n):
        buf[i] = rows[i]
    nb = _rref(buf, n)
    return tuple(buf[i] for i in range(nb))


def rank(rows):
    cdef int n = len(rows)
    if n > 128:
        raise ValueError("too many rows for the compiled kernel")
    cdef uint64_t buf[128]
    cdef int i
    for i in range(n):
        buf[i] = rows[i]
    cdef int nb = 0
    cdef uint64_t x, y
    cdef int j, p
    cdef uint64_t basis[128]
    for i in range(n):
        x = buf[i]
        for j in range(nb):
            y = x ^ basis[j]
            if y < x:
                x = y
        if x:
            p = nb
            while p > 0 and basis[p - 1] < x:
                basis[p] = basis[p - 1]
                p -= 1
            basis[p] = x
            nb += 1
    return nb


def reduce_vector(rows, vec):
    """Remainder of ``vec`` after elimination by canonical ``rows``."""
    cdef uint64_t x = vec
    cdef uint64_t r
    for r_obj in rows:
        r = r_obj
        if (x >> _lead(r)) & 1:
            x ^= r
    return x


def min_pairwise_distance(flat, n, k, floor_exit=0):
    """Minimum subspace distance over all pairs of n constant-dim-k words."""
    cdef Py_ssize_t nn = n
    cdef int kk = k
    cdef int floor_e = floor_exit
    cdef uint64_t *words = <uint64_t *>malloc(nn * kk * sizeof(uint64_t))
    if words == NULL:
        raise MemoryError()
    cdef Py_ssize_t idx
    for idx in range(nn * kk):
        words[idx] = flat[idx]
    cdef int best = -1
    cdef Py_ssize_t i, j
    cdef int t, b, nb, added, d, p
    cdef uint64_t scratch[128]
    cdef uint64_t x, y
    with nogil:
        for i in range(nn):
            for j in range(i + 1, nn):
                nb = kk
                for t in range(kk):
                    scratch[t] = words[i * kk + t]
                added = 0
                for t in range(kk):
                    x = words[j * kk + t]
                    for b in range(nb):
                        y = x ^ scratch[b]
                        if y < x:
                            x = y
                    if x:
                        p = nb
                        while p > 0 and scratch[p - 1] < x:
                            scratch[p] = scratch[p - 1]
                            p -= 1
                        scratch[p] = x
                        nb += 1
                        added += 1
                d = 2 * added
                if best < 0 or d < best:
                    best = d
                    if best <= floor_e:
                        break
            if 0 <= best <= floor_e:
                break
    free(words)
    return best


def scale_rows_rref(rows, scalar, modulus, v):
    """Multiply every row by a field scalar, return the canonical span."""
    cdef int n = len(rows)
    if n > 128:
        raise ValueError("too many rows for the compiled kernel")
    cdef uint64_t buf[128]
    cdef uint64_t s = scalar
    cdef uint64_t m = modulus
    cdef int vv = v
    cdef int i, nb
    for i in range(n):
        buf[i] = _mul(rows[i], s, m, vv)
    nb = _rref(buf, n)
    return tuple(buf[i] for i in range(nb))


def orbit_min_key(rows, modulus, v, max_steps=1 << 24):
    """Walk the orbit under x-multiplication; return (min member, length)."""
    cdef int n = len(rows)
    if n > 64:
        raise ValueError("too many rows for the compiled kernel")
    cdef uint64_t start[64]
    cdef uint64_t cur[64]
    cdef uint64_t best[64]
    cdef uint64_t m = modulus
    cdef int vv = v
    cdef int64_t cap = max_steps
    cdef int i, nb, cmp_res
    for i in range(n):
        cur[i] = rows[i]
    nb = _rref(cur, n)
    for i in range(nb):
        start[i] = cur[i]
        best[i] = cur[i]
    cdef int64_t steps = 0
    cdef bint is_start, is_less
    with nogil:
        while True:
            for i in range(nb):
                cur[i] = _mul(cur[i], 2, m, vv)
            _rref(cur, nb)
            steps += 1
            is_start = True
            for i in range(nb):
                if cur[i] != start[i]:
                    is_start = False
                    break
            if is_start:
                break
            is_less = False
            for i in range(nb):
                if cur[i] != best[i]:
                    is_less = cur[i] < best[i]
                    break
            if is_less:
                for i in range(nb):
                    best[i] = cur[i]
            if steps > cap:
                with gil:
                    raise RuntimeError("orbit walk exceeded max_steps")
    return tuple(best[i] for i in range(nb)), steps

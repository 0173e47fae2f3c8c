"""Pure-Python kernels: GF(2^v) arithmetic and GF(2) bitset linear algebra.

Rows and field elements are plain ints (bit i = coordinate/coefficient i),
so everything here works for any ambient dimension.  The compiled twin in
``_core`` implements the same functions for v <= 63 / 64-bit rows; callers
pick a backend through :mod:`singercode.backend`.

Canonical form used throughout: reduced rows with pairwise-distinct leading
bits, fully eliminated, sorted in decreasing integer order.
"""


def gf_mul(a, b, modulus, v):
    """Carry-less multiply modulo a degree-v polynomial."""
    top = 1 << v
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= modulus
    return r


def gf_pow(a, e, modulus, v):
    """a**e by square-and-multiply; e must be >= 0."""
    r = 1
    base = a
    while e:
        if e & 1:
            r = gf_mul(r, base, modulus, v)
        base = gf_mul(base, base, modulus, v)
        e >>= 1
    return r


def gf_inv(a, modulus, v):
    """Multiplicative inverse via a**(2^v - 2); a must be nonzero."""
    return gf_pow(a, (1 << v) - 2, modulus, v)


def rref(rows):
    """Canonical reduced form of the span of ``rows`` (decreasing ints)."""
    basis = {}
    for r in rows:
        while r:
            h = r.bit_length() - 1
            if h in basis:
                r ^= basis[h]
            else:
                basis[h] = r
                break
    out = sorted(basis.values(), reverse=True)
    for i in range(len(out)):
        r = out[i]
        for j in range(i + 1, len(out)):
            if (r >> (out[j].bit_length() - 1)) & 1:
                r ^= out[j]
        out[i] = r
    out.sort(reverse=True)
    return tuple(out)


def rank(rows):
    basis = {}
    for r in rows:
        while r:
            h = r.bit_length() - 1
            if h in basis:
                r ^= basis[h]
            else:
                basis[h] = r
                break
    return len(basis)


def reduce_vector(rows, vec):
    """Remainder of ``vec`` after elimination by canonical ``rows``.

    Zero iff vec lies in the span.
    """
    for r in rows:
        if (vec >> (r.bit_length() - 1)) & 1:
            vec ^= r
    return vec


def min_pairwise_distance(flat, n, k, floor_exit=0):
    """Minimum subspace distance over all pairs of n constant-dim-k words.

    ``flat`` holds n*k canonical rows.  Returns at floor_exit early; pass
    the smallest value actually attainable (2 for pairwise-distinct words).
    """
    best = -1
    scratch = [0] * (2 * k)
    for i in range(n):
        oi = i * k
        for j in range(i + 1, n):
            oj = j * k
            nb = k
            scratch[:k] = flat[oi:oi + k]
            added = 0
            for t in range(k):
                x = flat[oj + t]
                for b in range(nb):
                    y = x ^ scratch[b]
                    if y < x:
                        x = y
                if x:
                    # keep scratch sorted descending so single-pass reduce stays valid
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
                if best <= floor_exit:
                    return best
    return best


def scale_rows_rref(rows, scalar, modulus, v):
    """Multiply every row by a field scalar, return the canonical span."""
    return rref([gf_mul(r, scalar, modulus, v) for r in rows])


def orbit_min_key(rows, modulus, v, max_steps=1 << 24):
    """Walk the multiplicative orbit of a subspace under x-multiplication.

    Returns (lexicographically smallest member rows, orbit length).
    """
    start = rref(rows)
    best = start
    cur = start
    steps = 0
    while True:
        cur = scale_rows_rref(cur, 2, modulus, v)
        steps += 1
        if cur == start:
            return best, steps
        if cur < best:
            best = cur
        if steps > max_steps:
            raise RuntimeError("orbit walk exceeded max_steps")

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mod-q kernels: row reduction and quadratic-form batch scans.

Semantics match grasskit._kernels_py exactly (same pivoting, same returns);
callers guarantee q*q < 2**63 so products never overflow int64.
"""

backend_name = "c"


cdef long long _inv_mod(long long a, long long q):
    cdef long long old_r = a % q, r = q
    cdef long long old_s = 1, s = 0
    cdef long long quot, tmp
    while r != 0:
        quot = old_r / r
        tmp = old_r - quot * r
        old_r = r
        r = tmp
        tmp = old_s - quot * s
        old_s = s
        s = tmp
    old_s %= q
    if old_s < 0:
        old_s += q
    return old_s


def rref_mod(long long[::1] a, Py_ssize_t rows, Py_ssize_t cols, long long q):
    """Reduce a row-major int buffer to RREF mod q in place.

    Pivot choice is the first row with a nonzero entry in column order,
    so the result is deterministic.  Returns (rank, pivot_columns).
    """
    cdef Py_ssize_t r = 0, i, j, k, piv
    cdef long long inv, f, v
    pivots = []
    for j in range(cols):
        piv = -1
        for i in range(r, rows):
            if a[i * cols + j] % q != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for k in range(cols):
                v = a[r * cols + k]
                a[r * cols + k] = a[piv * cols + k]
                a[piv * cols + k] = v
        inv = _inv_mod(a[r * cols + j] % q, q)
        for k in range(cols):
            a[r * cols + k] = a[r * cols + k] * inv % q
        for i in range(rows):
            if i == r:
                continue
            f = a[i * cols + j] % q
            if f != 0:
                for k in range(cols):
                    v = (a[i * cols + k] - f * a[r * cols + k]) % q
                    if v < 0:
                        v += q
                    a[i * cols + k] = v
        pivots.append(j)
        r += 1
        if r == rows:
            break
    return r, pivots


def eval_forms_scan(long long[::1] coeffs, long long[::1] ia, long long[::1] ja,
                    long long[::1] offsets, long long[::1] coords, long long q):
    """Scan a flattened batch of quadratic forms over dense coordinates mod q.

    Form f covers term slots offsets[f]..offsets[f+1]; each slot t
    contributes coeffs[t] * coords[ia[t]] * coords[ja[t]].  Returns the
    (index, value) of the first form with a nonzero value, else (-1, 0).
    """
    cdef Py_ssize_t nforms = offsets.shape[0] - 1
    cdef Py_ssize_t f, t
    cdef long long acc
    for f in range(nforms):
        acc = 0
        for t in range(offsets[f], offsets[f + 1]):
            acc = (acc + coeffs[t] * coords[ia[t]] % q * coords[ja[t]]) % q
        if acc % q != 0:
            acc %= q
            if acc < 0:
                acc += q
            return f, acc
    return -1, 0

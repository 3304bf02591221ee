"""Pure-Python twins of the compiled mod-q kernels.

Same signatures and pivoting rules as ``_ckernels``; used when the
extension is not built.  Values must satisfy q*q < 2**63 only for the
compiled backend, but the contract is kept identical here.
"""

backend_name = "python"


def rref_mod(a, rows, cols, q):
    """Reduce a row-major int buffer to RREF mod q in place.

    Pivot choice is the first row with a nonzero entry in column order,
    so the result is deterministic.  Returns (rank, pivot_columns).
    """
    r = 0
    pivots = []
    for j in range(cols):
        piv = -1
        for i in range(r, rows):
            if a[i * cols + j] % q:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for k in range(cols):
                a[r * cols + k], a[piv * cols + k] = a[piv * cols + k], a[r * cols + k]
        inv = pow(a[r * cols + j] % q, -1, q)
        for k in range(cols):
            a[r * cols + k] = a[r * cols + k] * inv % q
        for i in range(rows):
            if i == r:
                continue
            f = a[i * cols + j] % q
            if f:
                for k in range(cols):
                    a[i * cols + k] = (a[i * cols + k] - f * a[r * cols + k]) % q
        pivots.append(j)
        r += 1
        if r == rows:
            break
    return r, pivots


def eval_forms_scan(coeffs, ia, ja, offsets, coords, q):
    """Scan a flattened batch of quadratic forms over dense coordinates mod q.

    Form f covers term slots offsets[f]..offsets[f+1]; each slot t
    contributes coeffs[t] * coords[ia[t]] * coords[ja[t]].  Returns the
    (index, value) of the first form with a nonzero value, else (-1, 0).
    """
    nforms = len(offsets) - 1
    for f in range(nforms):
        acc = 0
        for t in range(offsets[f], offsets[f + 1]):
            acc = (acc + coeffs[t] * coords[ia[t]] % q * coords[ja[t]]) % q
        if acc:
            return f, acc
    return -1, 0

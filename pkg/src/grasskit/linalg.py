"""Exact dense matrices with deterministic rank, kernel and determinant.

All elimination uses the first nonzero entry in column order as the pivot,
so echelon forms, kernels and ranks are reproducible.  Over GF(q) with a
word-sized modulus the row reduction is delegated to the mod-q kernel
backend; everything else runs on field scalars directly.
"""

from __future__ import annotations

from array import array

from . import kernels
from .errors import ShapeError
from .field import PRIME

_WORD_LIMIT = 1 << 31  # q*q must stay below 2**63 for the int64 kernels


class Matrix:
    __slots__ = ("field", "data")

    def __init__(self, field, rows_data):
        self.field = field
        self.data = [list(row) for row in rows_data]
        width = len(self.data[0]) if self.data else 0
        if any(len(row) != width for row in self.data):
            raise ShapeError("ragged rows")

    @classmethod
    def from_ints(cls, field, rows_data):
        return cls(field, [[field.of(x) for x in row] for row in rows_data])

    @classmethod
    def identity(cls, field, n):
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, r, c):
        zero = field.zero
        return cls(field, [[zero] * c for _ in range(r)])

    @property
    def rows(self):
        return len(self.data)

    @property
    def cols(self):
        return len(self.data[0]) if self.data else 0

    def entry(self, i, j):
        return self.data[i][j]

    def column(self, j):
        return [row[j] for row in self.data]

    def transpose(self):
        return Matrix(self.field, [list(col) for col in zip(*self.data)] if self.data else [])

    def mul(self, other):
        if self.field != other.field:
            raise ShapeError("field mismatch")
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        zero = self.field.zero
        out = []
        bt = list(zip(*other.data))
        for row in self.data:
            out.append([sum((a * b for a, b in zip(row, col) if a and b), zero) for col in bt])
        return Matrix(self.field, out)

    def matvec(self, vec):
        if len(vec) != self.cols:
            raise ShapeError("vector length mismatch")
        zero = self.field.zero
        return [sum((a * b for a, b in zip(row, vec) if a and b), zero) for row in self.data]

    def rref(self):
        """Reduced row echelon form; returns (rank, pivot_columns, rows)."""
        f = self.field
        if f.kind == PRIME and f.q < _WORD_LIMIT and self.data:
            buf = array("q", [int(x) for row in self.data for x in row])
            rank, pivots = kernels.rref_mod(buf, self.rows, self.cols, f.q)
            cols = self.cols
            rows = [
                [f.of(buf[i * cols + j]) for j in range(cols)]
                for i in range(self.rows)
            ]
            return rank, pivots, rows
        return _rref_generic(f, [list(row) for row in self.data])

    def rank(self):
        return self.rref()[0]

    def kernel_basis(self):
        """Canonical basis of the right kernel, one vector per free column.

        Vector for free column j has a 1 in slot j and the negated RREF
        entries in the pivot slots; this is the reduced-echelon kernel
        basis, so equal kernels give equal bases.
        """
        rank, pivots, rows = self.rref()
        one, zero = self.field.one, self.field.zero
        pivot_set = set(pivots)
        basis = []
        for j in range(self.cols):
            if j in pivot_set:
                continue
            v = [zero] * self.cols
            v[j] = one
            for r, c in enumerate(pivots):
                v[c] = -rows[r][j]
            basis.append(v)
        return basis

    def det(self):
        if self.rows != self.cols:
            raise ShapeError("determinant of a non-square matrix")
        return det_rows(self.field, self.data)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.data == other.data
        )

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"Matrix[{self.rows}x{self.cols}]({body})"


def _rref_generic(field, data):
    rows = len(data)
    cols = len(data[0]) if rows else 0
    r = 0
    pivots = []
    for j in range(cols):
        piv = -1
        for i in range(r, rows):
            if data[i][j]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            data[r], data[piv] = data[piv], data[r]
        inv = data[r][j] ** -1
        data[r] = [x * inv for x in data[r]]
        lead = data[r]
        for i in range(rows):
            if i != r and data[i][j]:
                fac = data[i][j]
                data[i] = [a - fac * b for a, b in zip(data[i], lead)]
        pivots.append(j)
        r += 1
        if r == rows:
            break
    return r, pivots, data


def det_rows(field, rows_data):
    """Exact determinant of a square list-of-rows: cofactors up to 3x3, elimination beyond."""
    n = len(rows_data)
    zero, one = field.zero, field.one
    if n == 0:
        return one
    if n == 1:
        return rows_data[0][0]
    if n == 2:
        (a, b), (c, d) = rows_data
        return a * d - b * c
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows_data
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    data = [list(row) for row in rows_data]
    sign = 1
    for j in range(n):
        piv = -1
        for i in range(j, n):
            if data[i][j]:
                piv = i
                break
        if piv < 0:
            return zero
        if piv != j:
            data[j], data[piv] = data[piv], data[j]
            sign = -sign
        lead = data[j]
        inv = lead[j] ** -1
        for i in range(j + 1, n):
            if data[i][j]:
                fac = data[i][j] * inv
                data[i] = [a - fac * b for a, b in zip(data[i], lead)]
    acc = one
    for j in range(n):
        acc = acc * data[j][j]
    return sign * acc if sign < 0 else acc


def mat_rank(m: Matrix) -> int:
    return m.rank()


def kernel_basis(m: Matrix):
    return m.kernel_basis()

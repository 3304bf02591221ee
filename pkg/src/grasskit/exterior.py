"""Sparse p-vectors over k^n, wedge products and the maps carrying them around.

Coordinates are keyed by strictly increasing index tuples, 1-based; a
coefficient under an arbitrary index list is read off through the
antisymmetric sign convention (``normalize_indices``).  The degree-p
component is the whole object; there is no graded algebra here.
"""

from __future__ import annotations

from itertools import combinations

from .errors import ShapeError
from .linalg import Matrix, det_rows


def normalize_indices(raw, n=None):
    """Sort an index list, returning (sign, tuple) or (0, None) on a repeat.

    The sign is that of the sorting permutation, so the pair expresses the
    antisymmetric extension of tuple-keyed coordinates to arbitrary index
    lists.
    """
    if n is not None:
        for i in raw:
            if not 1 <= i <= n:
                raise ShapeError(f"index {i} outside 1..{n}")
    idx = list(raw)
    sign = 1
    # insertion sort with swap counting; index lists are short
    for a in range(1, len(idx)):
        b = a
        while b > 0 and idx[b - 1] > idx[b]:
            idx[b - 1], idx[b] = idx[b], idx[b - 1]
            sign = -sign
            b -= 1
        if b > 0 and idx[b - 1] == idx[b]:
            return 0, None
    return sign, tuple(idx)


class Multivector:
    __slots__ = ("field", "n", "p", "terms")

    def __init__(self, field, n, p, terms=None):
        if p < 0 or n < 0 or p > n:
            raise ShapeError(f"no degree-{p} component in dimension {n}")
        self.field = field
        self.n = n
        self.p = p
        self.terms = {}
        if terms:
            for idx, c in terms.items() if isinstance(terms, dict) else terms:
                idx = tuple(idx)
                if len(idx) != p or any(not 1 <= i <= n for i in idx):
                    raise ShapeError(f"bad index tuple {idx} for degree {p} in k^{n}")
                if any(a >= b for a, b in zip(idx, idx[1:])):
                    raise ShapeError(f"index tuple {idx} is not strictly increasing")
                if c:
                    acc = self.terms.get(idx)
                    c = c if acc is None else acc + c
                    if c:
                        self.terms[idx] = c
                    else:
                        self.terms.pop(idx, None)

    @classmethod
    def zero(cls, field, n, p):
        return cls(field, n, p)

    @classmethod
    def basis(cls, field, n, idx):
        """The basis p-vector for a strictly increasing tuple of indices."""
        return cls(field, n, len(idx), {tuple(idx): field.one})

    @classmethod
    def from_vector(cls, field, n, coords):
        if len(coords) != n:
            raise ShapeError("coordinate vector length mismatch")
        return cls(field, n, 1, {(i + 1,): field.of(c) for i, c in enumerate(coords) if c})

    @classmethod
    def from_vectors(cls, field, n, vectors):
        """The wedge of 1-vectors v1 ^ v2 ^ ... — a decomposable element by construction."""
        if not vectors:
            raise ShapeError("empty vector list")
        w = cls.from_vector(field, n, vectors[0])
        for v in vectors[1:]:
            w = w.wedge(cls.from_vector(field, n, v))
        return w

    def _check(self, other):
        if self.field != other.field or self.n != other.n:
            raise ShapeError("multivector space mismatch")

    def coefficient(self, raw):
        """Coordinate under an arbitrary index list, via the antisymmetric convention."""
        if len(raw) != self.p:
            raise ShapeError(f"expected {self.p} indices, got {len(raw)}")
        sign, idx = normalize_indices(raw, self.n)
        if sign == 0:
            return self.field.zero
        c = self.terms.get(idx)
        if c is None:
            return self.field.zero
        return c if sign > 0 else -c

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Multivector)
            and self.field == other.field
            and (self.n, self.p) == (other.n, other.p)
            and self.terms == other.terms
        )

    def __add__(self, other):
        self._check(other)
        if self.p != other.p:
            raise ShapeError("degree mismatch in sum")
        out = dict(self.terms)
        for idx, c in other.terms.items():
            acc = out.get(idx)
            c = c if acc is None else acc + c
            if c:
                out[idx] = c
            else:
                out.pop(idx, None)
        w = Multivector(self.field, self.n, self.p)
        w.terms = out
        return w

    def __neg__(self):
        w = Multivector(self.field, self.n, self.p)
        w.terms = {idx: -c for idx, c in self.terms.items()}
        return w

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field.of(c)
        w = Multivector(self.field, self.n, self.p)
        if c:
            w.terms = {idx: k * c for idx, k in self.terms.items()}
        return w

    def wedge(self, other):
        self._check(other)
        if self.p + other.p > self.n:
            raise ShapeError(f"degree overflow: {self.p}+{other.p} > {self.n}")
        out = {}
        for ia, ca in self.terms.items():
            for ib, cb in other.terms.items():
                sign, idx = normalize_indices(ia + ib)
                if sign == 0:
                    continue
                c = ca * cb
                if sign < 0:
                    c = -c
                acc = out.get(idx)
                c = c if acc is None else acc + c
                if c:
                    out[idx] = c
                else:
                    out.pop(idx, None)
        w = Multivector(self.field, self.n, self.p + other.p)
        w.terms = out
        return w

    def sorted_terms(self):
        return sorted(self.terms.items())

    def support_indices(self):
        """All ambient indices appearing in some term."""
        s = set()
        for idx in self.terms:
            s.update(idx)
        return sorted(s)

    def __repr__(self):
        if not self.terms:
            return f"0[^{self.p} k^{self.n}]"
        bits = [f"({c})e{''.join(map(str, idx))}" for idx, c in self.sorted_terms()]
        return " + ".join(bits)


def wedge(a: Multivector, b: Multivector) -> Multivector:
    return a.wedge(b)


def induced_map(L: Matrix, w: Multivector) -> Multivector:
    """Apply the degree-p extension of a linear map: coordinates of the image
    are p x p minors of the selected columns, collected with signs."""
    if L.cols != w.n:
        raise ShapeError(f"map expects k^{L.cols}, multivector lives in k^{w.n}")
    if L.field != w.field:
        raise ShapeError("field mismatch")
    m = L.rows
    p = w.p
    if p > m:
        raise ShapeError(f"degree {p} exceeds target dimension {m}")
    out = Multivector(w.field, m, p)
    acc = out.terms
    for idx, c in w.terms.items():
        cols = [L.column(i - 1) for i in idx]
        support = [r for r in range(m) if any(col[r] for col in cols)]
        if len(support) < p:
            continue
        for rows in combinations(support, p):
            d = det_rows(w.field, [[col[r] for col in cols] for r in rows])
            if d:
                key = tuple(r + 1 for r in rows)
                v = acc.get(key)
                v = c * d if v is None else v + c * d
                if v:
                    acc[key] = v
                else:
                    acc.pop(key, None)
    return out


def dual_iso(w: Multivector) -> Multivector:
    """Complement isomorphism: each basis term maps to its complementary
    index set with the coefficient kept as is (no sign)."""
    full = range(1, w.n + 1)
    out = Multivector(w.field, w.n, w.n - w.p)
    out.terms = {
        tuple(i for i in full if i not in set(idx)): c for idx, c in w.terms.items()
    }
    return out


def pushforward(f, w: Multivector, target_n: int) -> Multivector:
    """Relabel-or-drop map: index i goes to f[i] when defined, else the
    basis vector dies.  Covers coordinate projections and the relabeling
    isomorphisms onto an index subset."""
    for i, j in f.items():
        if not 1 <= j <= target_n:
            raise ShapeError(f"target index {j} outside 1..{target_n}")
        if not 1 <= i <= w.n:
            raise ShapeError(f"source index {i} outside 1..{w.n}")
    out = Multivector(w.field, target_n, w.p)
    acc = out.terms
    for idx, c in w.terms.items():
        mapped = []
        dead = False
        for i in idx:
            j = f.get(i)
            if j is None:
                dead = True
                break
            mapped.append(j)
        if dead:
            continue
        sign, key = normalize_indices(mapped)
        if sign == 0:
            continue
        v = c if sign > 0 else -c
        old = acc.get(key)
        v = v if old is None else old + v
        if v:
            acc[key] = v
        else:
            acc.pop(key, None)
    return out

"""Cone-preserving maps attached to relation triples.

Each triple (A, B, C) yields a fold-and-project map X into k^(p+2), a slot
selector Z onto k^4, and the composite degree map: induced X, then the
complement isomorphism, then induced Z.  Substituting the image coordinates
into the three-term relation on k^4 reproduces the triple's rank-6 form up
to a sign, which is certified symbolically rather than derived
combinatorially.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import PullbackIdentityError, ShapeError
from .exterior import Multivector, dual_iso, induced_map
from .linalg import Matrix
from .relations import PlueckerIndex, QuadraticForm, RelationTriple, pluecker_form, rank6_form


@dataclass
class GcpMap:
    triple: RelationTriple
    n: int
    field: object
    X: Matrix
    Z: Matrix

    @property
    def p(self):
        return self.triple.p


def _validate_triple(t: RelationTriple, n: int):
    idx = t.all_indices()
    if len(set(idx)) != len(idx):
        raise ShapeError("triple indices must be distinct to build the map")
    if any(i < 1 or i > n for i in idx):
        raise ShapeError("triple index exceeds ambient dimension")


def build_X(field, t: RelationTriple, n: int) -> Matrix:
    """The (p+2) x n 0/1 matrix sending e_i to the slot of i in the sorted
    union of A, the second pair components and C; a first pair component is
    folded onto its partner's slot; all other indices die."""
    _validate_triple(t, n)
    s_prime = sorted(set(t.A) | {b1 for _, b1 in t.B} | set(t.C))
    pos = {xi: j for j, xi in enumerate(s_prime)}
    one, zero = field.one, field.zero
    rows = [[zero] * n for _ in range(len(s_prime))]
    for xi, j in pos.items():
        rows[j][xi - 1] = one
    for b0, b1 in t.B:
        rows[pos[b1]][b0 - 1] = one
    return Matrix(field, rows)


def build_Z(field, t: RelationTriple, x_mat: Matrix) -> Matrix:
    """The 4 x (p+2) selector: row j reads off the X-image slot of the j-th
    entry of A."""
    s_prime = sorted(set(t.A) | {b1 for _, b1 in t.B} | set(t.C))
    pos = {xi: j for j, xi in enumerate(s_prime)}
    one, zero = field.one, field.zero
    rows = [[zero] * len(s_prime) for _ in range(4)]
    for j, alpha in enumerate(t.A):
        rows[j][pos[alpha]] = one
    return Matrix(field, rows)


def gcp_map(field, t: RelationTriple, n: int) -> GcpMap:
    x_mat = build_X(field, t, n)
    z_mat = build_Z(field, t, x_mat)
    return GcpMap(t, n, field, x_mat, z_mat)


def apply_gcp(g: GcpMap, w: Multivector) -> Multivector:
    """Image in the degree-2 component of k^4: induced X, complement
    isomorphism on k^(p+2), induced Z."""
    if w.n != g.n or w.p != g.p:
        raise ShapeError(f"expected a degree-{g.p} multivector over k^{g.n}")
    if w.field != g.field:
        raise ShapeError("field mismatch")
    y = induced_map(g.X, w)
    y = dual_iso(y)
    return induced_map(g.Z, y)


@lru_cache(maxsize=8)
def _k4_form(field) -> QuadraticForm:
    """The single three-term relation on the degree-2 component of k^4."""
    return pluecker_form(field, 4, PlueckerIndex((1,), (2, 3, 4)))


def k4_relation_value(v: Multivector):
    """Value of the three-term relation at an element of degree 2 over k^4."""
    return _k4_form(v.field).evaluate(v)


def pullback_check(field, t: RelationTriple, n: int) -> int:
    """Certify symbolically that composing the k^4 relation with the triple's
    map equals +/- the triple's rank-6 form, and return that sign.

    The composite is expanded over every basis p-vector (each has at most a
    single image term because X is a fold of basis vectors) and compared to
    the rank-6 form as canonical polynomials.  Failure is a fatal error: the
    identity is a theorem, so a mismatch means a bug."""
    g = gcp_map(field, t, n)
    p = t.p
    functionals = {pair: [] for pair in combinations((1, 2, 3, 4), 2)}
    for idx in combinations(range(1, n + 1), p):
        img = apply_gcp(g, Multivector.basis(field, n, idx))
        for pair, c in img.terms.items():
            functionals[pair].append((c, idx))
    raw_terms = []
    for left, right, sign in (
        ((1, 2), (3, 4), 1),
        ((1, 3), (2, 4), -1),
        ((1, 4), (2, 3), 1),
    ):
        for ci, ti in functionals[left]:
            for cj, tj in functionals[right]:
                raw_terms.append((sign * ci * cj, ti, tj))
    pulled = QuadraticForm.build(field, n, p, raw_terms)
    target = rank6_form(field, n, t)
    if pulled == target:
        return 1
    if pulled == -target:
        return -1
    raise PullbackIdentityError(
        f"pullback of the k^4 relation does not match the rank-6 form for {t}"
    )

"""Parameter-dependent criterion in p+2 variables.

The power matrix X has (i, j) entry x_i^(j-1); composing its induced degree
map with the complement isomorphism and the leading 4-row selector gives
six polynomial coordinates, and the three-term combination H of those
coordinates vanishes identically exactly on the decomposables.  H can be
built symbolically (small n) or probed at random points of a prime field
without ever materializing it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import GrasskitError, ShapeError
from .exterior import Multivector, dual_iso, induced_map
from .field import Field, GFElement, PRIME, RATIONAL, is_prime
from .linalg import Matrix
from .multipoly import MultiPoly
from .witness import Subspace

SLOT_PAIRS = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))

_minor_cache = {}
_bracket_cache = {}


def clear_minor_cache():
    _minor_cache.clear()
    _bracket_cache.clear()


def _power_minor(field, num_vars, rows, exps) -> MultiPoly:
    """Determinant of the monomial matrix [x_{rows[r]} ** exps[c]], memoized
    on (rows, exps); expansion is along the last row, reusing sub-minors."""
    key = (field, num_vars, rows, exps)
    got = _minor_cache.get(key)
    if got is not None:
        return got
    k = len(rows)
    if k == 0:
        out = MultiPoly.const(field, num_vars, 1)
    elif k == 1:
        out = MultiPoly.variable(field, num_vars, rows[0], exps[0])
    else:
        out = MultiPoly.zero(field, num_vars)
        for c in range(k):
            sub = _power_minor(field, num_vars, rows[:-1], exps[:c] + exps[c + 1:])
            term = MultiPoly.variable(field, num_vars, rows[-1], exps[c]) * sub
            out = out + term if (k - 1 + c) % 2 == 0 else out - term
    _minor_cache[key] = out
    return out


def param_X(field, p, n):
    """The (p+2) x n matrix of monomials x_i^(j-1), as nested lists."""
    if n < p + 2:
        raise ShapeError(f"parametric construction needs n >= p+2, got n={n}, p={p}")
    nv = p + 2
    return [
        [MultiPoly.variable(field, nv, i, j) if j else MultiPoly.const(field, nv, 1)
         for j in range(n)]
        for i in range(1, nv + 1)
    ]


@dataclass
class ParamImage:
    """The six polynomial coordinates of the image in degree 2 over k^4."""

    p: int
    n: int
    coords: dict  # (i, j) with 1 <= i < j <= 4  ->  MultiPoly in p+2 variables

    def degree_bound_ok(self):
        cap = self.p * (self.n - 1)
        return all(poly.total_degree() <= cap for poly in self.coords.values())


def param_image(w: Multivector) -> ParamImage:
    """Term-by-term image: the coordinate at slot pair (i, j) collects, for
    every term of w, the power-matrix minor on the complementary p rows and
    the term's column set."""
    p, n = w.p, w.n
    if n < p + 2:
        raise ShapeError(f"parametric construction needs n >= p+2, got n={n}, p={p}")
    nv = p + 2
    field = w.field
    all_rows = range(1, nv + 1)
    coords = {pair: MultiPoly.zero(field, nv) for pair in SLOT_PAIRS}
    for idx, c in sorted(w.terms.items()):
        exps = tuple(i - 1 for i in idx)
        for pair in SLOT_PAIRS:
            rows = tuple(r for r in all_rows if r not in pair)
            minor = _power_minor(field, nv, rows, exps)
            if minor:
                coords[pair] = coords[pair] + minor.scale(c)
    return ParamImage(p, n, coords)


def _h_bracket(field, nv, ti, tj):
    """The polynomial multiplying c_I * c_J in H, cached per coordinate-tuple
    pair: the three-term combination of complementary-row minors, symmetrized
    when the tuples differ (both orders contribute to H)."""
    key = (field, nv, ti, tj)
    got = _bracket_cache.get(key)
    if got is not None:
        return got
    all_rows = range(1, nv + 1)

    def minor(pair, idx):
        rows = tuple(r for r in all_rows if r not in pair)
        return _power_minor(field, nv, rows, tuple(i - 1 for i in idx))

    def combo(a, b):
        return (
            minor((1, 2), a) * minor((3, 4), b)
            - minor((1, 3), a) * minor((2, 4), b)
            + minor((1, 4), a) * minor((2, 3), b)
        )

    out = combo(ti, tj) if ti == tj else combo(ti, tj) + combo(tj, ti)
    _bracket_cache[key] = out
    return out


def h_poly(w: Multivector) -> MultiPoly:
    """The criterion polynomial; identically zero iff w is decomposable.

    Accumulated pairwise over the terms of w through cached brackets, so
    repeated calls at one (p, n) share all minor products."""
    if w.n > 8:
        raise GrasskitError(
            "symbolic criterion is supported for n <= 8; use the randomized mode"
        )
    p, n = w.p, w.n
    if n < p + 2:
        raise ShapeError(f"parametric construction needs n >= p+2, got n={n}, p={p}")
    field = w.field
    nv = p + 2
    terms = sorted(w.terms.items())
    fast_q = field.q if field.kind == PRIME else None
    acc = {}
    for a, (ti, ci) in enumerate(terms):
        for tj, cj in terms[a:]:
            br = _h_bracket(field, nv, ti, tj)
            if not br.terms:
                continue
            if fast_q is not None:
                c = ci.v * cj.v % fast_q
                for e, k in br.terms.items():
                    v = (acc.get(e, 0) + k.v * c) % fast_q
                    if v:
                        acc[e] = v
                    else:
                        acc.pop(e, None)
            else:
                c = ci * cj
                for e, k in br.terms.items():
                    kv = k * c
                    v = acc.get(e)
                    kv = kv if v is None else v + kv
                    if kv:
                        acc[e] = kv
                    else:
                        acc.pop(e, None)
    out = MultiPoly.zero(field, nv)
    if fast_q is not None:
        out.terms = {e: GFElement(v, fast_q) for e, v in acc.items()}
    else:
        out.terms = acc
    return out


def h_poly_direct(w: Multivector) -> MultiPoly:
    """Reference path: the three-term combination of the six image
    coordinates, with no bracket sharing.  Kept as an independent route for
    cross-checking h_poly."""
    if w.n > 8:
        raise GrasskitError(
            "symbolic criterion is supported for n <= 8; use the randomized mode"
        )
    c = param_image(w).coords
    return c[(1, 2)] * c[(3, 4)] - c[(1, 3)] * c[(2, 4)] + c[(1, 4)] * c[(2, 3)]


@dataclass
class HVerdict:
    nonzero: bool
    point: tuple
    value: object
    trials_run: int
    seed: int
    prime: int

    @property
    def kind(self):
        return "nonzero_witness" if self.nonzero else "zero_so_far"


def _reduce_mod(w: Multivector, gf: Field) -> Multivector:
    """Reduce a multivector into GF(prime); rational coefficients map via
    modular inverse of the denominator, which must not vanish."""
    if w.field.kind == PRIME:
        if w.field.q != gf.q:
            raise GrasskitError(
                f"multivector lives over GF({w.field.q}); pass prime={w.field.q}"
            )
        return w
    terms = {}
    for idx, c in w.terms.items():
        if c.denominator % gf.q == 0:
            raise GrasskitError(
                f"prime {gf.q} divides a coefficient denominator; pick another prime"
            )
        terms[idx] = GFElement(
            c.numerator * pow(c.denominator, -1, gf.q), gf.q
        )
    return Multivector(gf, w.n, w.p, terms)


def _selector_matrix(gf: Field, p: int) -> Matrix:
    """The 4 x (p+2) block (identity | zero)."""
    one, zero = gf.one, gf.zero
    return Matrix(gf, [
        [one if i == j else zero for j in range(p + 2)] for i in range(4)
    ])


def h_value_at_point(w: Multivector, xs, gf: Field):
    """Value of H at a parameter point, computed through numeric minors
    without building H symbolically."""
    from .gcp import k4_relation_value

    n, p = w.n, w.p
    rows = []
    for x in xs:
        x = gf.of(x)
        row, acc = [], gf.one
        for _ in range(n):
            row.append(acc)
            acc = acc * x
        rows.append(row)
    x_mat = Matrix(gf, rows)
    img = dual_iso(induced_map(x_mat, w))
    img = induced_map(_selector_matrix(gf, p), img)
    return k4_relation_value(img)


def h_probabilistic(w: Multivector, trials=5, seed=0, prime=1000003) -> HVerdict:
    """Evaluate H at seeded uniform random points of GF(prime).

    Any nonzero value certifies indecomposability; an all-zero run is
    evidence of decomposability with per-trial error at most
    2p(n-1)/prime.  Never reports a witness on a decomposable input."""
    p, n = w.p, w.n
    if n < p + 2:
        raise ShapeError(f"parametric construction needs n >= p+2, got n={n}, p={p}")
    bound = 2 * p * (n - 1)
    if not is_prime(prime):
        raise GrasskitError(f"{prime} is not prime")
    if prime <= bound:
        raise GrasskitError(f"prime must exceed the degree bound {bound}")
    gf = Field.prime(prime)
    wq = _reduce_mod(w, gf)
    rng = random.Random(seed)
    for t in range(trials):
        xs = tuple(rng.randrange(prime) for _ in range(p + 2))
        val = h_value_at_point(wq, xs, gf)
        if val:
            return HVerdict(True, xs, val, t + 1, seed, prime)
    return HVerdict(False, None, None, trials, seed, prime)


_BIG_PRIME = 2147483647


def generic_rank_check(v: Subspace, p: int, seed=0, points=3, symbolic=False) -> bool:
    """Check that the power matrix restricted to the subspace has the maximal
    rank min(p+2, dim V).

    Sampled at `points` seeded random parameter points (rank at a point never
    exceeds the generic rank, so one full-rank sample certifies).  With
    symbolic=True and n <= 6 a failed sampling round falls back to scanning
    the maximal minors of the polynomial matrix exactly."""
    n = v.n
    if n < p + 2:
        raise ShapeError(f"parametric construction needs n >= p+2, got n={n}, p={p}")
    r = min(p + 2, v.dim)
    if r == 0:
        return True
    if v.field.kind == PRIME:
        gf = v.field
        if gf.q <= 2 * (p + 2) * (n - 1):
            raise GrasskitError(
                "base field too small for reliable rank sampling; use a larger prime"
            )
    else:
        gf = Field.prime(_BIG_PRIME)
    rng = random.Random(seed)
    u_cols = list(zip(*v.basis))  # n rows of the basis-column matrix
    u_mat = Matrix(gf, [[_scalar_mod(x, gf) for x in row] for row in u_cols])

    for _ in range(points):
        xs = [rng.randrange(gf.q) for _ in range(p + 2)]
        rows = []
        for x in xs:
            x = gf.of(x)
            row, acc = [], gf.one
            for _ in range(n):
                row.append(acc)
                acc = acc * x
            rows.append(row)
        if Matrix(gf, rows).mul(u_mat).rank() == r:
            return True
    if symbolic and n <= 6:
        return _generic_rank_symbolic(v, p, r)
    return False


def _scalar_mod(x, gf: Field):
    if isinstance(x, GFElement):
        return x
    if x.denominator % gf.q == 0:
        raise GrasskitError("denominator clash")
    return GFElement(x.numerator * pow(x.denominator, -1, gf.q), gf.q)


def _poly_det(field, rows) -> MultiPoly:
    k = len(rows)
    if k == 1:
        return rows[0][0]
    out = MultiPoly.zero(field, rows[0][0].num_vars)
    for c in range(k):
        sub = _poly_det(field, [row[:c] + row[c + 1:] for row in rows[:-1]])
        term = rows[-1][c] * sub
        out = out + term if (k - 1 + c) % 2 == 0 else out - term
    return out


def _generic_rank_symbolic(v: Subspace, p: int, r: int) -> bool:
    field = v.field if v.field.kind == RATIONAL else Field.rational()
    if v.field.kind != RATIONAL:
        raise GrasskitError("symbolic rank fallback is supported over the rationals")
    nv = p + 2
    x_rows = param_X(field, p, v.n)
    cols = list(zip(*v.basis))
    prod = [
        [
            sum(
                (x_rows[i][j].scale(cols[j][c]) for j in range(v.n) if cols[j][c]),
                MultiPoly.zero(field, nv),
            )
            for c in range(v.dim)
        ]
        for i in range(nv)
    ]
    for rowsel in combinations(range(nv), r):
        for colsel in combinations(range(v.dim), r):
            sub = [[prod[i][c] for c in colsel] for i in rowsel]
            if _poly_det(field, sub):
                return True
    return False

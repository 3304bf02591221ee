"""Quadratic relations that cut out the cone of decomposable p-vectors.

Two families are provided: the classical generating set of exchange
relations (each one a (p+1)-term form P_{A,B} indexed by a (p-1)-set A and
a (p+1)-set B), and the rank-6 family built from index triples (A, B, C):
the three-term pattern on four slots, with each coordinate replaced by a
2^m-fold sum over the m index pairs of B.  Forms are stored fully
normalized, so equality as polynomials is representation equality.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb, factorial

from . import kernels
from .errors import GrasskitError, ShapeError
from .exterior import Multivector, normalize_indices
from .field import PRIME
from .linalg import Matrix

_WORD_LIMIT = 1 << 31


class QuadraticForm:
    """Sparse quadratic form in tuple-keyed coordinates.

    Terms map an ordered pair (I, J) with I <= J (lexicographically) to a
    nonzero coefficient; every unordered pair appears at most once.
    """

    __slots__ = ("field", "n", "p", "terms")

    def __init__(self, field, n, p, terms=None):
        self.field = field
        self.n = n
        self.p = p
        self.terms = dict(terms) if terms else {}

    @classmethod
    def build(cls, field, n, p, raw_terms):
        """Accumulate (coeff, raw_I, raw_J) entries, normalizing each index
        list by antisymmetry and merging unordered pairs."""
        form = cls(field, n, p)
        acc = form.terms
        for coeff, raw_i, raw_j in raw_terms:
            if len(raw_i) != p or len(raw_j) != p:
                raise ShapeError("term arity differs from form degree")
            si, ti = normalize_indices(raw_i, n)
            if si == 0:
                continue
            sj, tj = normalize_indices(raw_j, n)
            if sj == 0:
                continue
            c = field.of(coeff)
            if si * sj < 0:
                c = -c
            key = (ti, tj) if ti <= tj else (tj, ti)
            old = acc.get(key)
            c = c if old is None else old + c
            if c:
                acc[key] = c
            else:
                acc.pop(key, None)
        return form

    def evaluate(self, w: Multivector):
        if (w.n, w.p) != (self.n, self.p) or w.field != self.field:
            raise ShapeError("form and multivector shapes differ")
        total = self.field.zero
        get = w.terms.get
        for (ti, tj), c in self.terms.items():
            a = get(ti)
            if a is None:
                continue
            b = get(tj)
            if b is None:
                continue
            total = total + c * a * b
        return total

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, QuadraticForm)
            and self.field == other.field
            and (self.n, self.p) == (other.n, other.p)
            and self.terms == other.terms
        )

    def __add__(self, other):
        if (
            self.field != other.field
            or (self.n, self.p) != (other.n, other.p)
        ):
            raise ShapeError("form shapes differ")
        out = dict(self.terms)
        for key, c in other.terms.items():
            old = out.get(key)
            c = c if old is None else old + c
            if c:
                out[key] = c
            else:
                out.pop(key, None)
        return QuadraticForm(self.field, self.n, self.p, out)

    def __neg__(self):
        return QuadraticForm(
            self.field, self.n, self.p, {k: -c for k, c in self.terms.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = [
            f"({c})P{''.join(map(str, i))}*P{''.join(map(str, j))}"
            for (i, j), c in self.sorted_terms()
        ]
        return " + ".join(bits)


@dataclass(frozen=True)
class PlueckerIndex:
    """Index pair (A, B) of an exchange relation, |A| = p-1, |B| = p+1."""

    A: tuple
    B: tuple

    def __post_init__(self):
        object.__setattr__(self, "A", tuple(self.A))
        object.__setattr__(self, "B", tuple(self.B))

    @property
    def p(self):
        return len(self.B) - 1

    def is_generator(self):
        """Membership test for the canonical generating family: both lists
        increasing, A not inside B, and when A\\B is a single index it must
        sit below every index of B\\A."""
        a, b = self.A, self.B
        if len(a) != len(b) - 2:
            return False
        if any(x >= y for x, y in zip(a, a[1:])) or any(x >= y for x, y in zip(b, b[1:])):
            return False
        sa, sb = set(a), set(b)
        if len(sa) != len(a) or len(sb) != len(b):
            return False
        diff = sa - sb
        if not diff:
            return False
        if len(diff) == 1:
            x = next(iter(diff))
            if any(y < x for y in sb - sa):
                return False
        return True


@dataclass(frozen=True)
class RelationTriple:
    """Index data (A, B, C) of a rank-6 relation: four slot indices, m index
    pairs, and p-m-2 fixed indices."""

    A: tuple
    B: tuple
    C: tuple

    def __post_init__(self):
        object.__setattr__(self, "A", tuple(self.A))
        object.__setattr__(self, "B", tuple(tuple(pr) for pr in self.B))
        object.__setattr__(self, "C", tuple(self.C))
        if len(self.A) != 4:
            raise ShapeError("slot list A must have exactly 4 indices")
        if any(len(pr) != 2 for pr in self.B):
            raise ShapeError("every entry of B must be an index pair")

    @property
    def m(self):
        return len(self.B)

    @property
    def p(self):
        return self.m + 2 + len(self.C)

    def all_indices(self):
        out = list(self.A)
        for b0, b1 in self.B:
            out.append(b0)
            out.append(b1)
        out.extend(self.C)
        return out

    def max_index(self):
        return max(self.all_indices())

    def condition5_ok(self):
        """The ordering constraints selecting the canonical finite family:
        all indices distinct, A and C increasing, pair components increasing
        both ways, first components below A[0], second components below A[2]."""
        idx = self.all_indices()
        if len(set(idx)) != len(idx):
            return False
        a = self.A
        if any(x >= y for x, y in zip(a, a[1:])):
            return False
        if any(x >= y for x, y in zip(self.C, self.C[1:])):
            return False
        b0s = [pr[0] for pr in self.B]
        b1s = [pr[1] for pr in self.B]
        if any(p0 >= p1 for p0, p1 in self.B):
            return False
        if any(x >= y for x, y in zip(b0s, b0s[1:])):
            return False
        if any(x >= y for x, y in zip(b1s, b1s[1:])):
            return False
        if any(x >= a[0] for x in b0s):
            return False
        if any(x >= a[2] for x in b1s):
            return False
        return True


def pluecker_form_raw(field, n, a_list, b_list) -> QuadraticForm:
    """The exchange relation on raw index lists: the i-th term moves b_i to
    the end of A with sign (-1)^(i-1); indices are then normalized."""
    a_list = list(a_list)
    b_list = list(b_list)
    if len(a_list) != len(b_list) - 2:
        raise GrasskitError("index sets need sizes p-1 and p+1")
    p = len(b_list) - 1
    raw_terms = []
    for i, b in enumerate(b_list):
        sign = 1 if i % 2 == 0 else -1
        raw_terms.append((sign, a_list + [b], b_list[:i] + b_list[i + 1:]))
    return QuadraticForm.build(field, n, p, raw_terms)


def pluecker_form(field, n, idx: PlueckerIndex) -> QuadraticForm:
    if not idx.is_generator():
        raise GrasskitError(f"{idx} is not a member of the generating family")
    if idx.B[-1] > n or (idx.A and idx.A[-1] > n):
        raise ShapeError("index exceeds ambient dimension")
    return pluecker_form_raw(field, n, idx.A, idx.B)


def enumerate_pluecker(p, n):
    """All generating exchange relations, in lexicographic (A, B) order."""
    if min(p, n - p) <= 1:
        return
    universe = range(1, n + 1)
    for a in combinations(universe, p - 1):
        sa = set(a)
        for b in combinations(universe, p + 1):
            sb = set(b)
            diff = sa - sb
            if not diff:
                continue
            if len(diff) == 1:
                x = next(iter(diff))
                if any(y < x for y in sb - sa):
                    continue
            yield PlueckerIndex(a, b)


def rank6_form(field, n, t: RelationTriple) -> QuadraticForm:
    """The three-term pattern on the four slots of A, each coordinate
    expanded as the 2^m-fold sum over the pairs of B, then normalized."""
    if any(i < 1 or i > n for i in t.all_indices()):
        raise ShapeError("triple index exceeds ambient dimension")
    m = t.m
    p = t.p
    if p > n:
        raise ShapeError(f"degree {p} exceeds ambient dimension {n}")
    tail = list(t.C)

    def summands(i, j):
        out = []
        for eps in product((0, 1), repeat=m):
            out.append([t.A[i], t.A[j]] + [t.B[l][e] for l, e in enumerate(eps)] + tail)
        return out

    raw_terms = []
    for i, j, k, l, sign in ((0, 1, 2, 3, 1), (0, 2, 1, 3, -1), (0, 3, 1, 2, 1)):
        left = summands(i, j)
        right = summands(k, l)
        for raw_i in left:
            for raw_j in right:
                raw_terms.append((sign, raw_i, raw_j))
    return QuadraticForm.build(field, n, p, raw_terms)


def enumerate_rank6(p, n):
    """All triples satisfying the canonical ordering constraints, in
    lexicographic (m, A, B, C) order."""
    big_m = min(p, n - p) - 2
    universe = range(1, n + 1)
    for m in range(0, big_m + 1):
        csize = p - m - 2
        for a in combinations(universe, 4):
            a1, a3 = a[0], a[2]
            used = set(a)
            chosen = []

            def rec(start0, start1):
                if len(chosen) == m:
                    rest = [x for x in universe if x not in used]
                    for c in combinations(rest, csize):
                        yield RelationTriple(a, tuple(chosen), c)
                    return
                for b0 in range(start0, a1):
                    if b0 in used:
                        continue
                    for b1 in range(max(start1, b0 + 1), a3):
                        if b1 in used or b1 == b0:
                            continue
                        used.add(b0)
                        used.add(b1)
                        chosen.append((b0, b1))
                        yield from rec(b0 + 1, b1 + 1)
                        chosen.pop()
                        used.discard(b0)
                        used.discard(b1)

            yield from rec(1, 1)


def catalan(r):
    return comb(2 * r, r) // (r + 1)


def _pair_count(p, n, m):
    """Number of index pairs (A, B) with the intersection sized so that m+3
    terms of the exchange relation survive."""
    d = (
        factorial(m + 1)
        * factorial(m + 3)
        * factorial(p - m - 2)
        * factorial(n - p - m - 2)
    )
    num = factorial(n)
    if num % d:
        raise GrasskitError("internal: count formula not integral")
    return num // d


def count_pluecker(p, n) -> int:
    big_m = min(p, n - p) - 2
    if big_m < 0:
        return 0
    a0 = _pair_count(p, n, 0)
    if a0 % 4:
        raise GrasskitError("internal: count formula not integral")
    total = a0 // 4
    for m in range(1, big_m + 1):
        total += _pair_count(p, n, m)
    return total


def count_rank6(p, n) -> int:
    big_m = min(p, n - p) - 2
    if big_m < 0:
        return 0
    total = 0
    for m in range(big_m + 1):
        d = factorial(2 * m + 4) * factorial(p - m - 2) * factorial(n - p - m - 2)
        num = factorial(n)
        if num % d:
            raise GrasskitError("internal: count formula not integral")
        total += (num // d) * (catalan(m + 2) - catalan(m + 1))
    return total


def evaluate_form(f: QuadraticForm, w: Multivector):
    return f.evaluate(w)


def form_rank(f: QuadraticForm) -> int:
    """Rank of the symmetric coefficient matrix restricted to the occurring
    coordinates.  Needs an invertible 2, hence characteristic != 2."""
    if f.field.characteristic() == 2:
        raise GrasskitError("rank of a quadratic form is not defined here in characteristic 2")
    coords = sorted({t for pair in f.terms for t in pair})
    pos = {t: i for i, t in enumerate(coords)}
    size = len(coords)
    zero = f.field.zero
    half = f.field.of(2) ** -1
    rows = [[zero] * size for _ in range(size)]
    for (ti, tj), c in f.terms.items():
        i, j = pos[ti], pos[tj]
        if i == j:
            rows[i][i] = c
        else:
            rows[i][j] = c * half
            rows[j][i] = c * half
    return Matrix(f.field, rows).rank()


def expand_rank6(t: RelationTriple):
    """Raw summand index pairs of the integer-combination expansion: one
    (A_raw, B_raw) pair per choice vector pair (mu, nu) in {0,1}^m x {0,1}^m."""
    m = t.m
    gammas = list(t.C)
    out = []
    for mu in product((0, 1), repeat=m):
        a_raw = [t.B[l][e] for l, e in enumerate(mu)] + gammas + [t.A[0]]
        for nu in product((0, 1), repeat=m):
            b_raw = [t.A[1], t.A[2], t.A[3]] + [t.B[l][e] for l, e in enumerate(nu)] + gammas
            out.append((a_raw, b_raw))
    return out


def expand_rank6_signed(t: RelationTriple):
    """Summands sorted and aggregated: (net_sign, sorted_A, sorted_B),
    degenerate summands (a repeated index) dropped."""
    agg = {}
    for a_raw, b_raw in expand_rank6(t):
        sa, ta = normalize_indices(a_raw)
        if sa == 0:
            continue
        sb, tb = normalize_indices(b_raw)
        if sb == 0:
            continue
        key = (ta, tb)
        agg[key] = agg.get(key, 0) + sa * sb
    return [(s, a, b) for (a, b), s in sorted(agg.items()) if s]


def expand_rank6_check(field, n, t: RelationTriple) -> bool:
    """Exact form identity: the raw summand exchange relations add up to the
    rank-6 form of the triple."""
    total = QuadraticForm(field, n, t.p)
    for a_raw, b_raw in expand_rank6(t):
        total = total + pluecker_form_raw(field, n, a_raw, b_raw)
    return total == rank6_form(field, n, t)


def threeterm_identity_check(field, n, nu, alphas, pairs=(), gammas=()) -> bool:
    """Check the cyclic linear identity between rank-6 forms:
    the three triples with slots (nu_i, alphas) and the extra pair
    (nu_{i+1}, nu_{i+2}) added to B, minus the six triples with nu_j moved
    into C instead, sum to the zero form."""
    nu = tuple(nu)
    alphas = tuple(alphas)
    if len(nu) != 3 or len(alphas) != 3:
        raise ShapeError("need 3 cycle indices and 3 fixed slot indices")
    pairs = tuple(tuple(pr) for pr in pairs)
    gammas = tuple(gammas)
    flat = list(nu) + list(alphas) + [x for pr in pairs for x in pr] + list(gammas)
    if len(set(flat)) != len(flat):
        raise ShapeError("identity indices must be distinct")
    p = len(pairs) + len(gammas) + 3
    total = QuadraticForm(field, n, p)
    for i in range(3):
        t = RelationTriple(
            (nu[i],) + alphas,
            pairs + ((nu[(i + 1) % 3], nu[(i + 2) % 3]),),
            gammas,
        )
        total = total + rank6_form(field, n, t)
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            t = RelationTriple((nu[i],) + alphas, pairs, gammas + (nu[j],))
            total = total - rank6_form(field, n, t)
    return total.is_zero()


class FormBatch:
    """A relation family flattened against the dense coordinate layout of the
    degree-p component, for repeated evaluation over many multivectors.  Over
    a word-sized prime field the scan runs on the active kernel backend."""

    def __init__(self, field, n, p, labeled_forms):
        self.field = field
        self.n = n
        self.p = p
        self.labels = [lab for lab, _ in labeled_forms]
        self.forms = [f for _, f in labeled_forms]
        self.index = {t: i for i, t in enumerate(combinations(range(1, n + 1), p))}
        self._fast = field.kind == PRIME and field.q < _WORD_LIMIT
        coeffs, ia, ja, offs = [], [], [], [0]
        for f in self.forms:
            for (ti, tj), c in f.sorted_terms():
                ia.append(self.index[ti])
                ja.append(self.index[tj])
                coeffs.append(int(c) if self._fast else c)
            offs.append(len(ia))
        if self._fast:
            self._coeffs = array("q", coeffs)
            self._ia = array("q", ia)
            self._ja = array("q", ja)
            self._offs = array("q", offs)
        else:
            self._coeffs, self._ia, self._ja, self._offs = coeffs, ia, ja, offs

    def __len__(self):
        return len(self.forms)

    def _dense(self, w):
        if (w.n, w.p) != (self.n, self.p) or w.field != self.field:
            raise ShapeError("multivector does not match this batch")
        if self._fast:
            coords = array("q", bytes(8 * len(self.index)))
            for idx, c in w.terms.items():
                coords[self.index[idx]] = int(c)
            return coords
        coords = [self.field.zero] * len(self.index)
        for idx, c in w.terms.items():
            coords[self.index[idx]] = c
        return coords

    def scan(self, w):
        """(label, value) of the first relation not vanishing at w, else None."""
        coords = self._dense(w)
        if self._fast:
            i, val = kernels.eval_forms_scan(
                self._coeffs, self._ia, self._ja, self._offs, coords, self.field.q
            )
            if i < 0:
                return None
            return self.labels[i], self.field.of(val)
        zero = self.field.zero
        for i in range(len(self.forms)):
            acc = zero
            for t in range(self._offs[i], self._offs[i + 1]):
                a = coords[self._ia[t]]
                if not a:
                    continue
                b = coords[self._ja[t]]
                if not b:
                    continue
                acc = acc + self._coeffs[t] * a * b
            if acc:
                return self.labels[i], acc
        return None

    def all_vanish(self, w) -> bool:
        return self.scan(w) is None


@lru_cache(maxsize=64)
def pluecker_batch(field, p, n) -> FormBatch:
    return FormBatch(
        field, n, p,
        [(idx, pluecker_form(field, n, idx)) for idx in enumerate_pluecker(p, n)],
    )


@lru_cache(maxsize=64)
def rank6_batch(field, p, n) -> FormBatch:
    return FormBatch(
        field, n, p,
        [(t, rank6_form(field, n, t)) for t in enumerate_rank6(p, n)],
    )

"""Sparse multivariate polynomials with exact field coefficients.

Terms live in a dict keyed by dense exponent tuples; zero coefficients are
never stored, so equal polynomials have identical term maps.  The canonical
term order (used when serializing) is graded lexicographic, leading term
first.
"""

from __future__ import annotations

from .errors import ShapeError


class MultiPoly:
    __slots__ = ("field", "num_vars", "terms")

    def __init__(self, field, num_vars, terms=None):
        self.field = field
        self.num_vars = num_vars
        self.terms = {}
        if terms:
            for e, c in terms.items() if isinstance(terms, dict) else terms:
                if len(e) != num_vars:
                    raise ShapeError(f"exponent vector {e} has wrong arity")
                if c:
                    e = tuple(e)
                    acc = self.terms.get(e)
                    c = c if acc is None else acc + c
                    if c:
                        self.terms[e] = c
                    else:
                        self.terms.pop(e, None)

    @classmethod
    def zero(cls, field, num_vars):
        return cls(field, num_vars)

    @classmethod
    def const(cls, field, num_vars, c):
        c = field.of(c)
        p = cls(field, num_vars)
        if c:
            p.terms[(0,) * num_vars] = c
        return p

    @classmethod
    def variable(cls, field, num_vars, i, power=1):
        """The monomial x_i (1-based) raised to the given power."""
        if not 1 <= i <= num_vars:
            raise ShapeError(f"variable index {i} out of range")
        p = cls(field, num_vars)
        e = [0] * num_vars
        e[i - 1] = power
        p.terms[tuple(e)] = field.one
        return p

    @classmethod
    def monomial(cls, field, exponents, c):
        p = cls(field, len(exponents))
        c = field.of(c)
        if c:
            p.terms[tuple(exponents)] = c
        return p

    def _check(self, other):
        if self.field != other.field or self.num_vars != other.num_vars:
            raise ShapeError("polynomial ring mismatch")

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.field == other.field
            and self.num_vars == other.num_vars
            and self.terms == other.terms
        )

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            acc = out.get(e)
            c = c if acc is None else acc + c
            if c:
                out[e] = c
            else:
                out.pop(e, None)
        p = MultiPoly(self.field, self.num_vars)
        p.terms = out
        return p

    def __neg__(self):
        p = MultiPoly(self.field, self.num_vars)
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                acc = out.get(e)
                c = c if acc is None else acc + c
                if c:
                    out[e] = c
                else:
                    out.pop(e, None)
        p = MultiPoly(self.field, self.num_vars)
        p.terms = out
        return p

    def scale(self, c):
        c = self.field.of(c)
        p = MultiPoly(self.field, self.num_vars)
        if c:
            p.terms = {e: k * c for e, k in self.terms.items()}
        return p

    def eval(self, point):
        """Exact evaluation at a vector of scalars (length num_vars)."""
        if len(point) != self.num_vars:
            raise ShapeError("evaluation point has wrong arity")
        point = [self.field.of(x) for x in point]
        acc = self.field.zero
        for e, c in self.terms.items():
            val = c
            for x, k in zip(point, e):
                if k:
                    val = val * x ** k
            acc = acc + val
        return acc

    def total_degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def sorted_terms(self):
        """Graded-lex order, leading term first."""
        return sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), ec[0]), reverse=True)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}"
                for i, k in enumerate(e)
                if k
            )
            bits.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)


def poly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a * b


def poly_eval(a: MultiPoly, point):
    return a.eval(point)

"""Exact coefficient fields: arbitrary-precision rationals and GF(q) with prime q > 3.

Scalars are plain ``fractions.Fraction`` values for the rationals and
:class:`GFElement` residues for prime fields.  Both kinds support ``+ - * /``,
``** -1`` for inverses, truthiness (zero is falsy) and mixing with Python
ints, so algebraic code upstream is written once against either kind.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import GrasskitError, LoadError

RATIONAL = "rational"
PRIME = "prime"

_RATIONAL_RE = re.compile(r"[+-]?\d+(/\d+)?")

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for every n below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class GFElement:
    """Canonical residue in GF(q): equal values always have equal representations."""

    __slots__ = ("v", "q")

    def __init__(self, v, q):
        self.v = v % q
        self.q = q

    def _coerce(self, other):
        if isinstance(other, GFElement):
            if other.q != self.q:
                raise GrasskitError(f"mixed moduli {self.q} and {other.q}")
            return other.v
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return GFElement(self.v + w, self.q)

    __radd__ = __add__

    def __sub__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return GFElement(self.v - w, self.q)

    def __rsub__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return GFElement(w - self.v, self.q)

    def __mul__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return GFElement(self.v * w, self.q)

    __rmul__ = __mul__

    def __neg__(self):
        return GFElement(-self.v, self.q)

    def __pow__(self, e):
        return GFElement(pow(self.v, e, self.q), self.q)

    def __truediv__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return GFElement(self.v * pow(w, -1, self.q), self.q)

    def __rtruediv__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return GFElement(w * pow(self.v, -1, self.q), self.q)

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.q == other.q and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.q
        return NotImplemented

    def __hash__(self):
        return hash((self.q, self.v))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __str__(self):
        return str(self.v)

    def __repr__(self):
        return f"GF({self.q})[{self.v}]"


class Field:
    """A field descriptor: the rationals, or GF(q) for a prime q > 3.

    q = 2 and q = 3 are rejected: rank computations divide by 2 and the
    three-term relations need the signs +1, -1 and the factor 2 to stay
    distinct and invertible.
    """

    __slots__ = ("kind", "q")

    def __init__(self, kind, q=None):
        if kind == RATIONAL:
            if q is not None:
                raise GrasskitError("rational field takes no modulus")
        elif kind == PRIME:
            if not isinstance(q, int) or not is_prime(q):
                raise GrasskitError(f"modulus {q!r} is not prime")
            if q <= 3:
                raise GrasskitError("prime modulus must exceed 3")
        else:
            raise GrasskitError(f"unknown field kind {kind!r}")
        self.kind = kind
        self.q = q

    @classmethod
    def rational(cls):
        return cls(RATIONAL)

    @classmethod
    def prime(cls, q):
        return cls(PRIME, q)

    @property
    def zero(self):
        return Fraction(0) if self.kind == RATIONAL else GFElement(0, self.q)

    @property
    def one(self):
        return Fraction(1) if self.kind == RATIONAL else GFElement(1, self.q)

    def characteristic(self):
        return 0 if self.kind == RATIONAL else self.q

    def of(self, x):
        """Coerce an int, string or scalar of this field to canonical form."""
        if isinstance(x, bool) or isinstance(x, float):
            raise GrasskitError(f"refusing inexact or boolean scalar {x!r}")
        if self.kind == RATIONAL:
            if isinstance(x, Fraction):
                return x
            if isinstance(x, int):
                return Fraction(x)
            if isinstance(x, str):
                return self.from_str(x)
        else:
            if isinstance(x, GFElement):
                if x.q != self.q:
                    raise GrasskitError(f"residue mod {x.q} used in GF({self.q})")
                return x
            if isinstance(x, int):
                return GFElement(x, self.q)
            if isinstance(x, str):
                return self.from_str(x)
        raise GrasskitError(f"cannot coerce {x!r} into {self}")

    def from_str(self, s):
        """Parse the text form: "a/b" or "a" for rationals, a decimal residue for GF(q)."""
        s = s.strip()
        try:
            if self.kind == RATIONAL:
                if not _RATIONAL_RE.fullmatch(s):
                    raise ValueError("expected \"a\" or \"a/b\"")
                return Fraction(s)
            return GFElement(int(s, 10), self.q)
        except (ValueError, ZeroDivisionError) as exc:
            raise LoadError(f"bad scalar literal {s!r} for {self}: {exc}") from None

    def to_str(self, x):
        return str(self.of(x))

    def random(self, rng, lo=-9, hi=9):
        """A random scalar: uniform residue for GF(q), small integer for the rationals."""
        if self.kind == PRIME:
            return GFElement(rng.randrange(self.q), self.q)
        return Fraction(rng.randint(lo, hi))

    def spec(self):
        if self.kind == RATIONAL:
            return {"kind": "rational"}
        return {"kind": "prime", "q": self.q}

    @classmethod
    def from_spec(cls, d):
        try:
            kind = d["kind"]
        except (TypeError, KeyError):
            raise LoadError(f"bad field spec {d!r}") from None
        if kind == "rational":
            return cls.rational()
        if kind == "prime":
            if "q" not in d:
                raise LoadError("prime field spec needs a modulus \"q\"")
            return cls.prime(d["q"])
        raise LoadError(f"unknown field kind {kind!r}")

    @classmethod
    def from_flag(cls, s):
        """Parse the CLI form: "rational" or "prime:Q"."""
        if s == "rational":
            return cls.rational()
        if s.startswith("prime:"):
            try:
                return cls.prime(int(s[len("prime:"):], 10))
            except ValueError:
                raise GrasskitError(f"bad field flag {s!r}") from None
        raise GrasskitError(f"bad field flag {s!r} (want rational or prime:Q)")

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.kind == other.kind
            and self.q == other.q
        )

    def __hash__(self):
        return hash((self.kind, self.q))

    def __repr__(self):
        return "Q" if self.kind == RATIONAL else f"GF({self.q})"

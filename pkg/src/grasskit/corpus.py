"""Seeded random multivector generators shared by the decision front-end,
the benchmark command and the test suite."""

from __future__ import annotations

from itertools import combinations

from .exterior import Multivector


def random_vector(rng, field, n):
    return [field.random(rng) for _ in range(n)]


def random_decomposable(rng, field, n, p) -> Multivector:
    """A nonzero wedge of p random vectors."""
    while True:
        w = Multivector.from_vectors(
            field, n, [random_vector(rng, field, n) for _ in range(p)]
        )
        if w:
            return w


def random_dense(rng, field, n, p) -> Multivector:
    """A nonzero multivector with a random coefficient on every tuple."""
    while True:
        terms = {}
        for idx in combinations(range(1, n + 1), p):
            c = field.random(rng)
            if c:
                terms[idx] = c
        if terms:
            return Multivector(field, n, p, terms)


def two_term_sum(rng, field, n, p, shared_dim) -> Multivector:
    """Sum of two random decomposables whose factor spans share the given
    number of vectors; shared_dim <= p-2 generically lands off the cone,
    shared_dim = p-1 always on it."""
    if not 0 <= shared_dim < p:
        raise ValueError("shared_dim must lie in 0..p-1")
    while True:
        shared = [random_vector(rng, field, n) for _ in range(shared_dim)]
        a = shared + [random_vector(rng, field, n) for _ in range(p - shared_dim)]
        b = shared + [random_vector(rng, field, n) for _ in range(p - shared_dim)]
        wa = Multivector.from_vectors(field, n, a)
        wb = Multivector.from_vectors(field, n, b)
        w = wa + wb
        if wa and wb and w:
            return w


def mixed_corpus(rng, field, n, p, size):
    """Deterministic mixed bag: decomposables, two-part sums over every
    possible shared dimension, and dense random elements."""
    kinds = ["decomposable"]
    kinds += [("two_term", d) for d in range(p)]
    kinds += ["dense"]
    out = []
    for k in range(size):
        kind = kinds[k % len(kinds)]
        if kind == "decomposable":
            out.append(random_decomposable(rng, field, n, p))
        elif kind == "dense":
            out.append(random_dense(rng, field, n, p))
        else:
            out.append(two_term_sum(rng, field, n, p, kind[1]))
    return out

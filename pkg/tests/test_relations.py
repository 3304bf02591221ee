import pytest

from grasskit import (
    GrasskitError,
    Multivector,
    PlueckerIndex,
    RelationTriple,
    count_pluecker,
    count_rank6,
    enumerate_pluecker,
    enumerate_rank6,
    evaluate_form,
    expand_rank6,
    expand_rank6_check,
    expand_rank6_signed,
    form_rank,
    pluecker_batch,
    pluecker_form,
    pluecker_form_raw,
    rank6_batch,
    rank6_form,
    threeterm_identity_check,
)
from grasskit.corpus import mixed_corpus, random_decomposable, random_dense


def splitter(field, n, p):
    """e_1^..^e_p + e_{p+1}^..^e_{2p}: indecomposable whenever 2p <= n."""
    return Multivector(
        field, n, p,
        {tuple(range(1, p + 1)): field.one, tuple(range(p + 1, 2 * p + 1)): field.one},
    )


def test_pluecker_form_k4_anchor(QQ):
    # the single three-term relation for (p, n) = (2, 4)
    f = pluecker_form(QQ, 4, PlueckerIndex((1,), (2, 3, 4)))
    assert f.terms == {
        ((1, 2), (3, 4)): QQ.one,
        ((1, 3), (2, 4)): -QQ.one,
        ((1, 4), (2, 3)): QQ.one,
    }


def test_pluecker_form_36_frozen(QQ):
    # hand expansion for A = {1,2}, B = {3,4,5,6}: four surviving terms
    f = pluecker_form(QQ, 6, PlueckerIndex((1, 2), (3, 4, 5, 6)))
    assert f.terms == {
        ((1, 2, 3), (4, 5, 6)): QQ.one,
        ((1, 2, 4), (3, 5, 6)): -QQ.one,
        ((1, 2, 5), (3, 4, 6)): QQ.one,
        ((1, 2, 6), (3, 4, 5)): -QQ.one,
    }


def test_pluecker_vanishes_on_basis_decomposable(QQ):
    w = Multivector.basis(QQ, 6, (1, 2, 3))
    for idx in enumerate_pluecker(3, 6):
        assert evaluate_form(pluecker_form(QQ, 6, idx), w) == 0


def test_enumerate_pluecker_24_singleton():
    found = list(enumerate_pluecker(2, 4))
    assert found == [PlueckerIndex((1,), (2, 3, 4))]


def test_enumerate_pluecker_empty_cases():
    assert list(enumerate_pluecker(1, 5)) == []
    assert list(enumerate_pluecker(4, 5)) == []


def test_enumerate_pluecker_36_count():
    assert sum(1 for _ in enumerate_pluecker(3, 6)) == 45
    assert count_pluecker(3, 6) == 45


def test_rank6_form_24_is_three_term(QQ):
    t = RelationTriple((1, 2, 3, 4), (), ())
    f = rank6_form(QQ, 4, t)
    assert f.terms == {
        ((1, 2), (3, 4)): QQ.one,
        ((1, 3), (2, 4)): -QQ.one,
        ((1, 4), (2, 3)): QQ.one,
    }


def test_rank6_form_36_frozen(QQ):
    # hand expansion of the (3, 6) triple A={2,4,5,6}, B={(1,3)}:
    # pi12 = P124 - P234, pi34 = P156 + P356, pi13 = P125 - P235,
    # pi24 = P146 + P346, pi14 = P126 - P236, pi23 = P145 + P345
    t = RelationTriple((2, 4, 5, 6), ((1, 3),), ())
    f = rank6_form(QQ, 6, t)
    one = QQ.one
    assert f.terms == {
        ((1, 2, 4), (1, 5, 6)): one,
        ((1, 2, 4), (3, 5, 6)): one,
        ((1, 5, 6), (2, 3, 4)): -one,
        ((2, 3, 4), (3, 5, 6)): -one,
        ((1, 2, 5), (1, 4, 6)): -one,
        ((1, 2, 5), (3, 4, 6)): -one,
        ((1, 4, 6), (2, 3, 5)): one,
        ((2, 3, 5), (3, 4, 6)): one,
        ((1, 2, 6), (1, 4, 5)): one,
        ((1, 2, 6), (3, 4, 5)): one,
        ((1, 4, 5), (2, 3, 6)): -one,
        ((2, 3, 6), (3, 4, 5)): -one,
    }
    assert len(f.terms) == 12


def test_rank6_vanishes_on_decomposables(both_fields, rng):
    for field in both_fields:
        for _ in range(10):
            w = random_decomposable(rng, field, 6, 3)
            for t in enumerate_rank6(3, 6):
                assert evaluate_form(rank6_form(field, 6, t), w) == 0


def test_enumerate_rank6_24():
    assert list(enumerate_rank6(2, 4)) == [RelationTriple((1, 2, 3, 4), (), ())]


def test_enumerate_rank6_36_and_25():
    e36 = list(enumerate_rank6(3, 6))
    assert len(e36) == 33
    assert sum(1 for t in e36 if t.m == 0) == 30
    assert sum(1 for t in e36 if t.m == 1) == 3
    assert sum(1 for _ in enumerate_rank6(2, 5)) == 5
    assert count_rank6(2, 5) == 5


def test_enumerate_rank6_all_condition5():
    for t in enumerate_rank6(3, 7):
        assert t.condition5_ok()


def test_enumeration_order_lexicographic():
    e = list(enumerate_rank6(3, 6))
    keys = [(t.m, t.A, t.B, t.C) for t in e]
    assert keys == sorted(keys)
    pl = list(enumerate_pluecker(3, 6))
    pkeys = [(i.A, i.B) for i in pl]
    assert pkeys == sorted(pkeys)


def test_counts_table():
    assert count_pluecker(2, 4) == 1 and count_rank6(2, 4) == 1
    assert count_pluecker(3, 6) == 45 and count_rank6(3, 6) == 33
    assert count_pluecker(1, 5) == 0 and count_rank6(1, 5) == 0
    for n in range(4, 10):
        for p in range(2, n - 1):
            cp, cr = count_pluecker(p, n), count_rank6(p, n)
            assert cr <= cp
            assert (cr == cp) == (min(p, n - p) <= 2)


def test_counts_match_enumeration_small():
    for n in range(4, 9):
        for p in range(2, n - 1):
            assert sum(1 for _ in enumerate_pluecker(p, n)) == count_pluecker(p, n)
            assert sum(1 for _ in enumerate_rank6(p, n)) == count_rank6(p, n)


def test_evaluate_form_examples(QQ):
    f = pluecker_form(QQ, 4, PlueckerIndex((1,), (2, 3, 4)))
    w = Multivector(QQ, 4, 2, {(1, 2): QQ.one, (3, 4): QQ.one})
    assert evaluate_form(f, w) == 1
    assert evaluate_form(f, Multivector.zero(QQ, 4, 2)) == 0
    v13 = Multivector.from_vectors(QQ, 4, [[1, 0, 1, 0], [0, 1, 0, 1]])
    assert evaluate_form(f, v13) == 0


def test_form_rank_k4(QQ):
    f = pluecker_form(QQ, 4, PlueckerIndex((1,), (2, 3, 4)))
    assert form_rank(f) == 6


def test_form_rank_disjoint_eight(QQ):
    # p = 3, n = 7, A and B disjoint: four surviving terms, rank 8
    f = pluecker_form(QQ, 7, PlueckerIndex((1, 2), (4, 5, 6, 7)))
    assert form_rank(f) == 8


def test_form_rank_twice_exchange_size(QQ):
    for idx in enumerate_pluecker(3, 6):
        exchanged = len(set(idx.B) - (set(idx.A) & set(idx.B)))
        assert form_rank(pluecker_form(QQ, 6, idx)) == 2 * exchanged


def test_all_rank6_forms_have_rank_six(both_fields):
    for field in both_fields:
        for t in enumerate_rank6(3, 6):
            assert form_rank(rank6_form(field, 6, t)) == 6


def test_expand_rank6_m0_singleton():
    t = RelationTriple((2, 3, 4, 5), (), (1,))
    out = expand_rank6(t)
    assert out == [([1, 2], [3, 4, 5, 1])]
    # sorting B_raw = [3,4,5,1] costs three transpositions, hence the sign
    agg = expand_rank6_signed(t)
    assert agg == [(-1, (1, 2), (1, 3, 4, 5))]


def test_expand_rank6_m1_four_summands():
    t = RelationTriple((2, 4, 5, 6), ((1, 3),), ())
    out = expand_rank6(t)
    assert len(out) == 4
    assert out[0] == ([1, 2], [4, 5, 6, 1])


def test_expand_identity_all_36(QQ):
    for t in enumerate_rank6(3, 6):
        assert expand_rank6_check(QQ, 6, t)


def test_expand_identity_gf(GF101):
    for t in enumerate_rank6(2, 5):
        assert expand_rank6_check(GF101, 5, t)


def test_pluecker_form_raw_sign_flip(QQ):
    a = pluecker_form_raw(QQ, 6, [1, 2], [3, 4, 5, 6])
    b = pluecker_form_raw(QQ, 6, [2, 1], [3, 4, 5, 6])
    assert a == -b
    c = pluecker_form_raw(QQ, 6, [1, 2], [4, 3, 5, 6])
    assert a == -c


def test_threeterm_identity_smallest(both_fields):
    for field in both_fields:
        assert threeterm_identity_check(field, 7, (1, 2, 3), (4, 5, 6))


def test_threeterm_identity_larger(QQ):
    # p = 4 instance with a fixed pair already in place
    assert threeterm_identity_check(QQ, 9, (1, 2, 4), (6, 7, 8), pairs=((3, 5),))
    # and one with a fixed extra slot index
    assert threeterm_identity_check(QQ, 8, (1, 2, 3), (5, 6, 7), gammas=(4,))


def test_threeterm_rejects_repeats(QQ):
    with pytest.raises(GrasskitError):
        threeterm_identity_check(QQ, 7, (1, 2, 3), (3, 5, 6))


def test_threeterm_combination_vanishes_numerically(GF101, rng):
    # the identity holds identically, so the first-sum forms minus the
    # second-sum forms vanish on arbitrary inputs, not just the cone
    nu, alphas = (1, 2, 3), (4, 5, 6)
    field = GF101
    n, p = 7, 3
    forms = []
    for i in range(3):
        forms.append((1, rank6_form(field, n, RelationTriple(
            (nu[i],) + alphas, ((nu[(i + 1) % 3], nu[(i + 2) % 3]),), ()))))
    for i in range(3):
        for j in range(3):
            if i != j:
                forms.append((-1, rank6_form(field, n, RelationTriple(
                    (nu[i],) + alphas, (), (nu[j],)))))
    for _ in range(50):
        w = random_dense(rng, field, n, p)
        total = field.zero
        for s, f in forms:
            total = total + s * f.evaluate(w)
        assert total == 0


def test_batches_match_individual_forms(both_fields, rng):
    for field in both_fields:
        pb = pluecker_batch(field, 2, 5)
        rb = rank6_batch(field, 2, 5)
        for w in mixed_corpus(rng, field, 5, 2, 20):
            expect_p = None
            for idx in enumerate_pluecker(2, 5):
                v = pluecker_form(field, 5, idx).evaluate(w)
                if v:
                    expect_p = (idx, v)
                    break
            assert pb.scan(w) == expect_p
            expect_r = None
            for t in enumerate_rank6(2, 5):
                v = rank6_form(field, 5, t).evaluate(w)
                if v:
                    expect_r = (t, v)
                    break
            assert rb.scan(w) == expect_r


def test_splitter_violates_both_families(both_fields):
    for field in both_fields:
        w = splitter(field, 6, 3)
        assert pluecker_batch(field, 3, 6).scan(w) is not None
        assert rank6_batch(field, 3, 6).scan(w) is not None

import pytest

from grasskit import (
    Matrix,
    Multivector,
    RelationTriple,
    ShapeError,
    apply_gcp,
    build_X,
    build_Z,
    dual_iso,
    gcp_map,
    induced_map,
    k4_relation_value,
    mat_rank,
    pullback_check,
    rank6_form,
    enumerate_rank6,
)
from grasskit.corpus import random_decomposable, random_dense


T36 = RelationTriple((2, 4, 5, 6), ((1, 3),), ())


def as_ints(m: Matrix):
    return [[int(x) for x in row] for row in m.data]


def test_build_X_worked_example(QQ):
    # folded support {2,3,4,5,6}: e1 and e3 both land on slot 2
    x = build_X(QQ, T36, 6)
    assert as_ints(x) == [
        [0, 1, 0, 0, 0, 0],
        [1, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 1],
    ]


def test_build_X_m0_projection(QQ):
    t = RelationTriple((1, 2, 3, 4), (), (6,))
    x = build_X(QQ, t, 6)
    # plain relabeling projection onto {1,2,3,4,6}, no folding
    assert as_ints(x) == [
        [1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 1],
    ]


def test_build_X_full_rank(QQ):
    for t in enumerate_rank6(3, 6):
        assert mat_rank(build_X(QQ, t, 6)) == t.p + 2


def test_build_Z_worked_example(QQ):
    x = build_X(QQ, T36, 6)
    z = build_Z(QQ, T36, x)
    assert as_ints(z) == [
        [1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0],
        [0, 0, 0, 0, 1],
    ]


def test_build_Z_identity_for_24(QQ):
    t = RelationTriple((1, 2, 3, 4), (), ())
    x = build_X(QQ, t, 4)
    assert as_ints(build_Z(QQ, t, x)) == as_ints(Matrix.identity(QQ, 4))


def test_Z_X_slot_property(QQ):
    for t in enumerate_rank6(3, 6):
        g = gcp_map(QQ, t, 6)
        for j, alpha in enumerate(t.A):
            e = [QQ.zero] * 6
            e[alpha - 1] = QQ.one
            img = g.Z.matvec(g.X.matvec(e))
            expect = [QQ.one if r == j else QQ.zero for r in range(4)]
            assert img == expect


def test_apply_gcp_24_is_complement(QQ):
    t = RelationTriple((1, 2, 3, 4), (), ())
    g = gcp_map(QQ, t, 4)
    w = Multivector.basis(QQ, 4, (1, 2))
    assert apply_gcp(g, w).terms == {(3, 4): QQ.one}
    w2 = w + Multivector.basis(QQ, 4, (3, 4))
    img = apply_gcp(g, w2)
    assert img == w2
    assert k4_relation_value(img) == 1


def test_apply_gcp_sends_decomposables_to_cone(both_fields, rng):
    for field in both_fields:
        for t in (T36, RelationTriple((1, 2, 3, 4), (), (5,))):
            g = gcp_map(field, t, 6)
            for _ in range(8):
                w = random_decomposable(rng, field, 6, 3)
                assert k4_relation_value(apply_gcp(g, w)) == 0


def test_apply_gcp_equals_three_step_composition(GF101, rng):
    g = gcp_map(GF101, T36, 6)
    for _ in range(10):
        w = random_dense(rng, GF101, 6, 3)
        manual = induced_map(g.Z, dual_iso(induced_map(g.X, w)))
        assert apply_gcp(g, w) == manual


def test_apply_gcp_shape_check(QQ):
    g = gcp_map(QQ, T36, 6)
    with pytest.raises(ShapeError):
        apply_gcp(g, Multivector.basis(QQ, 6, (1, 2)))


def test_pullback_sign_24(QQ):
    # the complement map pulls the relation back to itself
    assert pullback_check(QQ, RelationTriple((1, 2, 3, 4), (), ()), 4) == 1


def test_pullback_all_36(QQ):
    for t in enumerate_rank6(3, 6):
        assert pullback_check(QQ, t, 6) in (1, -1)


def test_pullback_numeric_consistency(both_fields, rng):
    for field in both_fields:
        for t in list(enumerate_rank6(2, 5)) + [T36]:
            n = 5 if t.p == 2 else 6
            s = pullback_check(field, t, n)
            g = gcp_map(field, t, n)
            form = rank6_form(field, n, t)
            for _ in range(10):
                w = random_dense(rng, field, n, t.p)
                assert k4_relation_value(apply_gcp(g, w)) == s * form.evaluate(w)

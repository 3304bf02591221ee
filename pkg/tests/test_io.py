import pytest

from grasskit import (
    Field,
    LoadError,
    Multivector,
    PlueckerIndex,
    RelationTriple,
    pluecker_form,
)
from grasskit.io import (
    dump_form,
    dump_multipoly,
    dump_multivector,
    dump_relation,
    load_form,
    load_multipoly,
    load_multivector,
    load_relation,
)
from grasskit.multipoly import MultiPoly


def test_multivector_roundtrip(QQ, GF101):
    for field in (QQ, GF101):
        w = Multivector(
            field, 5, 2,
            {(1, 2): field.of(3), (2, 5): field.of("7") if field.kind != "rational" else field.of("-7/2")},
        )
        doc = dump_multivector(w)
        assert load_multivector(doc) == w
        assert dump_multivector(load_multivector(doc)) == doc


def test_multivector_load_errors(QQ):
    base = {"field": {"kind": "rational"}, "n": 4, "p": 2}
    with pytest.raises(LoadError):
        load_multivector({**base, "terms": [{"idx": [2, 1], "c": "1"}]})
    with pytest.raises(LoadError):
        load_multivector(
            {**base, "terms": [{"idx": [1, 2], "c": "1"}, {"idx": [1, 2], "c": "2"}]}
        )
    with pytest.raises(LoadError):
        load_multivector({**base, "terms": [{"idx": [1, 5], "c": "1"}]})
    with pytest.raises(LoadError):
        load_multivector({**base, "terms": [{"idx": [1, 2], "c": "0.5"}]})
    with pytest.raises(LoadError):
        load_multivector({"field": {"kind": "prime"}, "n": 4, "p": 2, "terms": []})


def test_relation_roundtrip():
    idx = PlueckerIndex((1, 2), (3, 4, 5, 6))
    assert load_relation(dump_relation(idx)) == idx
    t = RelationTriple((2, 4, 5, 6), ((1, 3),), ())
    assert load_relation(dump_relation(t)) == t
    with pytest.raises(LoadError):
        load_relation({"kind": "mystery"})


def test_form_dump_sorted_and_roundtrip(QQ):
    f = pluecker_form(QQ, 6, PlueckerIndex((1, 2), (3, 4, 5, 6)))
    doc = dump_form(f)
    keys = [(tuple(t["I"]), tuple(t["J"])) for t in doc["terms"]]
    assert keys == sorted(keys)
    assert load_form(doc, QQ, 6, 3) == f


def test_multipoly_roundtrip(QQ):
    p = (
        MultiPoly.variable(QQ, 3, 1, 2)
        + MultiPoly.monomial(QQ, (0, 1, 1), QQ.of("-2/3"))
        + MultiPoly.const(QQ, 3, 5)
    )
    doc = dump_multipoly(p)
    degs = [sum(t["e"]) for t in doc["terms"]]
    assert degs == sorted(degs, reverse=True)
    assert load_multipoly(doc, QQ) == p
    with pytest.raises(LoadError):
        load_multipoly({"vars": 2, "terms": [{"e": [1], "c": "1"}]}, QQ)


def test_field_spec_errors():
    with pytest.raises(LoadError):
        Field.from_spec({"kind": "prime"})
    with pytest.raises(LoadError):
        Field.from_spec({"kind": "real"})
    with pytest.raises(LoadError):
        Field.from_spec(42)

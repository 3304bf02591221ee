"""JSON document formats.

Every dump orders keys and entries deterministically, and every loader
validates what the corresponding dump emits, so documents round-trip.
"""

from __future__ import annotations

import json

from .errors import LoadError
from .exterior import Multivector
from .field import Field
from .multipoly import MultiPoly
from .relations import PlueckerIndex, QuadraticForm, RelationTriple


def dump_multivector(w: Multivector) -> dict:
    return {
        "field": w.field.spec(),
        "n": w.n,
        "p": w.p,
        "terms": [
            {"idx": list(idx), "c": w.field.to_str(c)} for idx, c in w.sorted_terms()
        ],
    }


def load_multivector(doc) -> Multivector:
    if not isinstance(doc, dict):
        raise LoadError("multivector document must be an object")
    for key in ("field", "n", "p", "terms"):
        if key not in doc:
            raise LoadError(f"multivector document lacks {key!r}")
    field = Field.from_spec(doc["field"])
    n, p = doc["n"], doc["p"]
    if not (isinstance(n, int) and isinstance(p, int)):
        raise LoadError("n and p must be integers")
    seen = set()
    terms = {}
    for entry in doc["terms"]:
        try:
            idx = tuple(entry["idx"])
            c = field.from_str(entry["c"])
        except (TypeError, KeyError):
            raise LoadError(f"bad term entry {entry!r}") from None
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise LoadError(f"index tuple {list(idx)} is not strictly increasing")
        if idx in seen:
            raise LoadError(f"duplicate index tuple {list(idx)}")
        seen.add(idx)
        if len(idx) != p or any(not 1 <= i <= n for i in idx):
            raise LoadError(f"index tuple {list(idx)} out of range for (n={n}, p={p})")
        if c:
            terms[idx] = c
    return Multivector(field, n, p, terms)


def dump_relation(rel) -> dict:
    if isinstance(rel, PlueckerIndex):
        return {"kind": "pluecker", "A": list(rel.A), "B": list(rel.B)}
    if isinstance(rel, RelationTriple):
        return {
            "kind": "rank6",
            "A": list(rel.A),
            "B": [list(pr) for pr in rel.B],
            "C": list(rel.C),
        }
    raise TypeError(f"not a relation index: {rel!r}")


def load_relation(doc):
    if not isinstance(doc, dict) or "kind" not in doc:
        raise LoadError("relation document must be an object with a kind")
    kind = doc["kind"]
    try:
        if kind == "pluecker":
            return PlueckerIndex(tuple(doc["A"]), tuple(doc["B"]))
        if kind == "rank6":
            return RelationTriple(
                tuple(doc["A"]),
                tuple(tuple(pr) for pr in doc["B"]),
                tuple(doc["C"]),
            )
    except (TypeError, KeyError) as exc:
        raise LoadError(f"bad relation document: {exc}") from None
    raise LoadError(f"unknown relation kind {kind!r}")


def dump_form(f: QuadraticForm) -> dict:
    return {
        "terms": [
            {"c": f.field.to_str(c), "I": list(i), "J": list(j)}
            for (i, j), c in f.sorted_terms()
        ]
    }


def load_form(doc, field, n, p) -> QuadraticForm:
    if not isinstance(doc, dict) or "terms" not in doc:
        raise LoadError("form document must be an object with terms")
    raw = []
    for entry in doc["terms"]:
        try:
            raw.append((field.from_str(entry["c"]), entry["I"], entry["J"]))
        except (TypeError, KeyError):
            raise LoadError(f"bad form term {entry!r}") from None
    return QuadraticForm.build(field, n, p, raw)


def dump_multipoly(poly: MultiPoly) -> dict:
    return {
        "vars": poly.num_vars,
        "terms": [
            {"e": list(e), "c": poly.field.to_str(c)} for e, c in poly.sorted_terms()
        ],
    }


def load_multipoly(doc, field) -> MultiPoly:
    if not isinstance(doc, dict) or "vars" not in doc or "terms" not in doc:
        raise LoadError("polynomial document must carry vars and terms")
    poly = MultiPoly.zero(field, doc["vars"])
    for entry in doc["terms"]:
        try:
            e = tuple(entry["e"])
            c = field.from_str(entry["c"])
        except (TypeError, KeyError):
            raise LoadError(f"bad polynomial term {entry!r}") from None
        if len(e) != doc["vars"] or any(not isinstance(k, int) or k < 0 for k in e):
            raise LoadError(f"bad exponent vector {entry!r}")
        if e in poly.terms:
            raise LoadError(f"duplicate exponent vector {list(e)}")
        if c:
            poly.terms[e] = c
    return poly


def dumps(doc) -> str:
    """Compact, key-order-preserving serialization used by all CLI output."""
    return json.dumps(doc, separators=(",", ":"))


def read_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise LoadError(
            f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None
    except OSError as exc:
        raise LoadError(f"cannot read {path}: {exc}") from None

"""Acceptance suite: one test per criterion, exact tolerances, one printed
pass line each.  Run with `pytest tests/test_acceptance.py -s` to see the
lines; the whole module is a few minutes on one core.
"""

import json
import random

import pytest

from grasskit import (
    Field,
    Multivector,
    Subspace,
    brute_force_decomposable,
    count_pluecker,
    count_rank6,
    enumerate_pluecker,
    enumerate_rank6,
    form_rank,
    generic_rank_check,
    gcp_map,
    apply_gcp,
    expand_rank6_check,
    h_poly,
    h_probabilistic,
    k4_relation_value,
    pluecker_batch,
    pluecker_form,
    pullback_check,
    q_dim,
    rank6_batch,
    rank6_form,
    witness_from_pair,
    witness_search,
)
from grasskit.cli import run
from grasskit.corpus import mixed_corpus, random_dense, random_vector
from grasskit.multipoly import MultiPoly

QQ = Field.rational()
GF101 = Field.prime(101)
PAIRS = ((2, 4), (2, 5), (3, 6), (3, 7))
CORPUS_PER_FIELD = 256  # 512 per (p, n) across the two fields


@pytest.fixture(scope="module")
def corpora():
    out = {}
    for p, n in PAIRS:
        for field in (QQ, GF101):
            rng = random.Random(90_000 + 10 * n + p)
            out[(p, n, field)] = mixed_corpus(rng, field, n, p, CORPUS_PER_FIELD)
    return out


def test_criterion_1_cardinalities():
    assert count_pluecker(2, 4) == 1 and count_rank6(2, 4) == 1
    assert count_rank6(3, 6) == 33 and count_pluecker(3, 6) == 45
    checked = 0
    for n in range(4, 10):
        for p in range(2, n - 1):
            cp = count_pluecker(p, n)
            cr = count_rank6(p, n)
            assert sum(1 for _ in enumerate_pluecker(p, n)) == cp, (p, n)
            assert sum(1 for _ in enumerate_rank6(p, n)) == cr, (p, n)
            assert cr <= cp, (p, n)
            assert (cr == cp) == (min(p, n - p) <= 2), (p, n)
            checked += 1
    print(f"\n[criterion 1] PASS: enumeration matches formulas on {checked} (p,n) grids")


def test_criterion_2_ranks():
    rank6_checked = 0
    for p, n in PAIRS + ((4, 8),):
        fields = (QQ, GF101) if (p, n) != (4, 8) else (QQ,)
        for field in fields:
            for t in enumerate_rank6(p, n):
                assert form_rank(rank6_form(field, n, t)) == 6, (p, n, t)
                rank6_checked += 1
    exchange_checked = 0
    for p, n in PAIRS:
        for field in (QQ, GF101):
            for idx in enumerate_pluecker(p, n):
                expect = 2 * len(set(idx.B) - (set(idx.A) & set(idx.B)))
                assert form_rank(pluecker_form(field, n, idx)) == expect, (p, n, idx)
                exchange_checked += 1
    print(
        f"\n[criterion 2] PASS: rank 6 on {rank6_checked} rank-6 forms, "
        f"2|B\\(A&B)| on {exchange_checked} exchange forms"
    )


def test_criterion_3_expansion_identity():
    total = 0
    for p, n in ((3, 6), (3, 7), (4, 8)):
        for t in enumerate_rank6(p, n):
            assert expand_rank6_check(QQ, n, t), (p, n, t)
            total += 1
    print(f"\n[criterion 3] PASS: integer-combination identity exact on {total} triples")


def test_criterion_4_pullback_identity():
    rng = random.Random(4444)
    total = 0
    for p, n in PAIRS:
        for t in enumerate_rank6(p, n):
            s = pullback_check(QQ, t, n)
            assert s in (1, -1), (p, n, t)
            g = gcp_map(GF101, t, n)
            form = rank6_form(GF101, n, t)
            for _ in range(100):
                w = random_dense(rng, GF101, n, p)
                assert k4_relation_value(apply_gcp(g, w)) == s * form.evaluate(w), (p, n, t)
            total += 1
    print(f"\n[criterion 4] PASS: symbolic sign + 100 numeric checks on {total} triples")


def test_criterion_5_oracle_equivalence(corpora):
    disagreements = 0
    checked = 0
    for p, n in PAIRS:
        for field in (QQ, GF101):
            pb = pluecker_batch(field, p, n)
            rb = rank6_batch(field, p, n)
            prime = 1000003 if field.kind == "rational" else field.q
            for w in corpora[(p, n, field)]:
                bf = brute_force_decomposable(w)
                if pb.all_vanish(w) != bf:
                    disagreements += 1
                if rb.all_vanish(w) != bf:
                    disagreements += 1
                if h_poly(w).is_zero() != bf:
                    disagreements += 1
                hv = h_probabilistic(w, trials=5, seed=1000 + checked, prime=prime)
                if hv.nonzero and bf:
                    disagreements += 1  # one-sided contract broken
                checked += 1
    assert disagreements == 0
    print(
        f"\n[criterion 5] PASS: kernel oracle, both families, symbolic H and "
        f"randomized H agree on {checked} corpus elements (0 disagreements)"
    )


def test_criterion_6_witness_soundness(corpora):
    searched = 0
    for p, n in PAIRS:
        for field in (QQ, GF101):
            for w in corpora[(p, n, field)]:
                if brute_force_decomposable(w):
                    continue
                res = witness_search(w)
                assert res.value != 0
                assert rank6_form(field, n, res.triple).evaluate(w) == res.value
                searched += 1
    pairs_done = 0
    for n in (6, 7, 8):
        rng = random.Random(6000 + n)
        done = 0
        while done < 67:
            field = QQ if done % 2 == 0 else GF101
            p = rng.randint(2, n - 2)
            v0 = Subspace.from_vectors(field, n, [random_vector(rng, field, n) for _ in range(p)])
            v1 = Subspace.from_vectors(field, n, [random_vector(rng, field, n) for _ in range(p)])
            if v0.dim != p or v1.dim != p or q_dim(v0, v1) < 2:
                continue
            witness_from_pair(v0, v1)  # separation conclusions re-checked inside
            done += 1
        pairs_done += done
    print(
        f"\n[criterion 6] PASS: witness search sound on {searched} indecomposables, "
        f"separation conclusions verified on {pairs_done} subspace pairs"
    )


def test_criterion_7_parametric_anchor():
    w = Multivector(QQ, 4, 2, {(1, 2): QQ.one, (3, 4): QQ.one})
    h = h_poly(w)
    prod = MultiPoly.const(QQ, 4, 1)
    for i in range(1, 5):
        for j in range(i + 1, 5):
            prod = prod * (MultiPoly.variable(QQ, 4, i) - MultiPoly.variable(QQ, 4, j))
    assert h == prod or h == -prod
    from grasskit.param import _poly_det, param_X
    detx = _poly_det(QQ, param_X(QQ, 2, 4))
    assert h == detx or h == -detx
    print("\n[criterion 7] PASS: splitter criterion equals the difference product up to sign")


def test_criterion_8_generic_rank():
    failures = 0
    for p, n in ((2, 5), (3, 6), (3, 7)):
        rng = random.Random(800 + n)
        for k in range(100):
            d = rng.randint(1, n)
            v = Subspace.from_vectors(QQ, n, [random_vector(rng, QQ, n) for _ in range(d)])
            if not generic_rank_check(v, p, seed=k):
                failures += 1
    assert failures == 0
    print("\n[criterion 8] PASS: maximal generic rank on 300 random subspaces (0 failures)")


def test_criterion_9_cli_determinism(tmp_path, capsys):
    doc = {
        "field": {"kind": "rational"},
        "n": 4,
        "p": 2,
        "terms": [{"idx": [1, 2], "c": "1"}, {"idx": [3, 4], "c": "1"}],
    }
    wfile = tmp_path / "w.json"
    wfile.write_text(json.dumps(doc))
    tfile = tmp_path / "t.json"
    tfile.write_text(json.dumps({"kind": "rank6", "A": [2, 4, 5, 6], "B": [[1, 3]], "C": []}))
    invocations = [
        ["count", "--p", "3", "--n", "6", "--verify"],
        ["relations", "--p", "3", "--n", "6", "--set", "rank6", "--forms"],
        ["relations", "--p", "2", "--n", "5", "--set", "pluecker"],
        ["decide", "--in", str(wfile), "--method", "bruteforce,rank6,pluecker", "--no-timings"],
        ["witness", "--in", str(wfile)],
        ["expand", "--triple", str(tfile)],
        ["gcpmap", "--triple", str(tfile), "--n", "6"],
        ["param", "--in", str(wfile), "--mode", "random", "--seed", "31"],
        ["param", "--in", str(wfile), "--mode", "symbolic"],
        ["bench", "--p", "2", "--n", "5", "--samples", "6", "--seed", "3", "--no-timings"],
    ]
    for argv in invocations:
        first_code = run(argv)
        first = capsys.readouterr().out
        second_code = run(argv)
        assert capsys.readouterr().out == first, argv
        assert first_code == second_code, argv
    print(f"\n[criterion 9] PASS: {len(invocations)} CLI invocations byte-identical on rerun")

"""Unified decomposability front-end.

Five methods share one tri-state contract: the kernel-dimension oracle,
scans of the two relation families, the randomized parametric criterion
(which can only ever answer "probably yes" on the cone side), and the
symbolic parametric criterion.  A "no" always carries a certificate that
can be re-checked independently of the code path that produced it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field

from . import io
from .errors import ConsistencyError, GrasskitError
from .exterior import Multivector
from .param import h_poly, h_probabilistic, h_value_at_point
from .field import Field
from .relations import pluecker_batch, pluecker_form, rank6_batch, rank6_form
from .witness import brute_force_decomposable, wedge_action_matrix

YES = "yes"
NO = "no"
PROBABLY_YES = "probably_yes"

METHOD_ORDER = ("bruteforce", "rank6", "pluecker", "param-random", "param-symbolic")


@dataclass
class MethodReport:
    method: str
    state: str
    certificate: dict
    micros: int


@dataclass
class Verdict:
    decomposable: str
    method: str
    certificate: dict
    timings: dict
    seed: int
    reports: list = dc_field(default_factory=list)


def _check_applicable(method, w):
    if method not in METHOD_ORDER:
        raise GrasskitError(f"unknown method {method!r} (know {', '.join(METHOD_ORDER)})")
    if method in ("param-random", "param-symbolic") and w.n < w.p + 2:
        raise GrasskitError(f"{method} needs n >= p+2 (got n={w.n}, p={w.p})")
    if method == "param-symbolic" and w.n > 8:
        raise GrasskitError("param-symbolic is limited to n <= 8; use param-random")


def _run_method(method, w, seed, prime, trials):
    if method == "bruteforce":
        if brute_force_decomposable(w):
            return YES, None
        mat = wedge_action_matrix(w)
        basis = mat.kernel_basis()
        return NO, {
            "kind": "kernel",
            "dimension": len(basis),
            "expected": w.p,
            "basis": [[w.field.to_str(x) for x in v] for v in basis],
        }
    if method in ("rank6", "pluecker"):
        batch = (rank6_batch if method == "rank6" else pluecker_batch)(w.field, w.p, w.n)
        hit = batch.scan(w)
        if hit is None:
            return YES, None
        label, value = hit
        return NO, {
            "kind": "relation",
            "relation": io.dump_relation(label),
            "value": w.field.to_str(value),
        }
    if method == "param-random":
        verdict = h_probabilistic(w, trials=trials, seed=seed, prime=prime)
        if verdict.nonzero:
            return NO, {
                "kind": "h_point",
                "point": list(verdict.point),
                "value": str(int(verdict.value)),
                "prime": verdict.prime,
                "seed": verdict.seed,
            }
        return PROBABLY_YES, None
    if method == "param-symbolic":
        h = h_poly(w)
        if h.is_zero():
            return YES, None
        exps, coeff = h.sorted_terms()[0]
        return NO, {
            "kind": "h_term",
            "exponents": list(exps),
            "coeff": w.field.to_str(coeff),
        }
    raise GrasskitError(f"unknown method {method!r}")


def decide(
    w: Multivector,
    methods=("bruteforce", "rank6", "pluecker"),
    cross_check=False,
    seed=0,
    prime=1000003,
    trials=5,
) -> Verdict:
    """Run the requested methods in order.

    Short-circuits on the first definitive answer unless cross_check is
    set, in which case all methods run and any yes/no disagreement is a
    fatal consistency error carrying the full report list ("probably yes"
    and "yes" are compatible)."""
    methods = tuple(methods)
    if not methods:
        raise GrasskitError("no methods requested")
    for m in methods:
        _check_applicable(m, w)
    reports = []
    for m in methods:
        t0 = time.perf_counter_ns()
        state, cert = _run_method(m, w, seed, prime, trials)
        micros = (time.perf_counter_ns() - t0) // 1000
        reports.append(MethodReport(m, state, cert, micros))
        if not cross_check and state in (YES, NO):
            break
    if cross_check:
        states = {r.state for r in reports}
        if NO in states and (YES in states or PROBABLY_YES in states):
            raise ConsistencyError(
                "methods disagree on decomposability",
                reports=[_report_doc(r) for r in reports],
            )
    deciding = None
    for m in METHOD_ORDER:
        for r in reports:
            if r.method == m and r.state in (YES, NO):
                deciding = r
                break
        if deciding:
            break
    if deciding is None:
        deciding = reports[0]
    return Verdict(
        decomposable=deciding.state,
        method=deciding.method,
        certificate=deciding.certificate,
        timings={r.method: r.micros for r in reports},
        seed=seed,
        reports=reports,
    )


def _report_doc(r: MethodReport):
    return {
        "method": r.method,
        "state": r.state,
        "certificate": r.certificate,
        "micros": r.micros,
    }


def verdict_doc(v: Verdict, with_timings=True) -> dict:
    doc = {
        "decomposable": v.decomposable,
        "method": v.method,
        "certificate": v.certificate,
        "seed": v.seed,
    }
    if with_timings:
        doc["timings_us"] = dict(v.timings)
    return doc


def recheck_certificate(w: Multivector, cert: dict) -> bool:
    """Re-validate a "no" certificate from scratch: re-evaluate the cited
    relation or point on w and compare with the stored value."""
    if not cert:
        return False
    kind = cert.get("kind")
    if kind == "relation":
        rel = io.load_relation(cert["relation"])
        from .relations import PlueckerIndex
        if isinstance(rel, PlueckerIndex):
            form = pluecker_form(w.field, w.n, rel)
        else:
            form = rank6_form(w.field, w.n, rel)
        val = form.evaluate(w)
        return bool(val) and w.field.to_str(val) == cert["value"]
    if kind == "kernel":
        mat = wedge_action_matrix(w)
        dim = w.n - mat.rank()
        return dim == cert["dimension"] and dim != w.p
    if kind == "h_point":
        gf = Field.prime(cert["prime"])
        from .param import _reduce_mod
        val = h_value_at_point(_reduce_mod(w, gf), cert["point"], gf)
        return bool(val) and str(int(val)) == cert["value"]
    if kind == "h_term":
        h = h_poly(w)
        c = h.terms.get(tuple(cert["exponents"]))
        return c is not None and w.field.to_str(c) == cert["coeff"]
    return False

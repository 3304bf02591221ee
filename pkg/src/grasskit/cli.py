"""Command-line surface: enumeration, evaluation, decision, witnesses,
expansion, map inspection and benchmarking, JSON in and out.

Exit codes: 0 for yes/probably-yes (or plain success), 10 for a certified
"no", 2 for usage or input errors, 3 for a cross-check consistency failure.
"""

from __future__ import annotations

import argparse
import csv
import os
import random
import sys

from . import io, kernels
from .corpus import random_decomposable, random_dense, two_term_sum
from .decide import METHOD_ORDER, NO, decide, verdict_doc
from .errors import ConsistencyError, GrasskitError
from .field import Field
from .gcp import gcp_map, pullback_check
from .param import h_poly, h_probabilistic
from .relations import (
    RelationTriple,
    count_pluecker,
    count_rank6,
    enumerate_pluecker,
    enumerate_rank6,
    expand_rank6,
    expand_rank6_check,
    expand_rank6_signed,
    pluecker_form,
    rank6_form,
)
from .witness import brute_force_decomposable, witness_search


def _resolve_seed(args):
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("GRASSKIT_SEED")
    return int(env) if env else 0


def _emit(line, out):
    if out is None:
        sys.stdout.write(line + "\n")
    else:
        out.write(line + "\n")


def cmd_relations(args):
    field = Field.from_flag(args.field)
    if args.set == "pluecker":
        stream = enumerate_pluecker(args.p, args.n)
        formof = lambda rel: pluecker_form(field, args.n, rel)
    else:
        stream = enumerate_rank6(args.p, args.n)
        formof = lambda rel: rank6_form(field, args.n, rel)
    out = open(args.out, "w", encoding="utf-8") if args.out else None
    try:
        for rel in stream:
            doc = io.dump_relation(rel)
            if args.forms:
                doc["form"] = io.dump_form(formof(rel))
            _emit(io.dumps(doc), out)
    finally:
        if out:
            out.close()
    return 0


def cmd_count(args):
    doc = {"pluecker": count_pluecker(args.p, args.n), "rank6": count_rank6(args.p, args.n)}
    ok = True
    if args.verify:
        doc["pluecker_enumerated"] = sum(1 for _ in enumerate_pluecker(args.p, args.n))
        doc["rank6_enumerated"] = sum(1 for _ in enumerate_rank6(args.p, args.n))
        ok = (
            doc["pluecker"] == doc["pluecker_enumerated"]
            and doc["rank6"] == doc["rank6_enumerated"]
        )
        doc["verified"] = ok
    print(io.dumps(doc))
    return 0 if ok else 1


def _parse_methods(spec):
    methods = tuple(m.strip() for m in spec.split(",") if m.strip())
    for m in methods:
        if m not in METHOD_ORDER:
            raise GrasskitError(f"unknown method {m!r} (know {', '.join(METHOD_ORDER)})")
    if not methods:
        raise GrasskitError("empty method list")
    return methods


def cmd_decide(args):
    w = io.load_multivector(io.read_json(args.infile))
    methods = _parse_methods(args.method)
    seed = _resolve_seed(args)
    verdict = decide(
        w,
        methods=methods,
        cross_check=args.cross_check,
        seed=seed,
        prime=args.prime,
        trials=args.trials,
    )
    randomized = "param-random" in {r.method for r in verdict.reports}
    doc = verdict_doc(verdict, with_timings=not args.no_timings)
    if not randomized:
        doc["seed"] = None
    print(io.dumps(doc))
    return 10 if verdict.decomposable == NO else 0


def cmd_witness(args):
    w = io.load_multivector(io.read_json(args.infile))
    if brute_force_decomposable(w):
        print(io.dumps({"decomposable": "yes", "witness": None}))
        return 0
    res = witness_search(w)
    doc = {
        "triple": io.dump_relation(res.triple),
        "value": w.field.to_str(res.value),
        "method": res.method,
        "condition5": res.condition5,
        "field": w.field.spec(),
    }
    print(io.dumps(doc))
    return 10


def _load_triple(path) -> RelationTriple:
    rel = io.load_relation(io.read_json(path))
    if not isinstance(rel, RelationTriple):
        raise GrasskitError("expected a rank6 relation document")
    return rel


def cmd_expand(args):
    t = _load_triple(args.triple)
    n = args.n if args.n is not None else t.max_index()
    field = Field.from_flag(args.field)
    doc = {
        "triple": io.dump_relation(t),
        "n": n,
        "summands": [
            {"A": list(a), "B": list(b)} for a, b in expand_rank6(t)
        ],
        "aggregated": [
            {"sign": s, "A": list(a), "B": list(b)} for s, a, b in expand_rank6_signed(t)
        ],
        "net_form_equal": expand_rank6_check(field, n, t),
    }
    print(io.dumps(doc))
    return 0


def cmd_gcpmap(args):
    t = _load_triple(args.triple)
    field = Field.from_flag(args.field)
    g = gcp_map(field, t, args.n)
    doc = {
        "triple": io.dump_relation(t),
        "n": args.n,
        "p": t.p,
        "X": [[int(x) for x in row] for row in g.X.data],
        "Z": [[int(x) for x in row] for row in g.Z.data],
        "sign": pullback_check(field, t, args.n),
    }
    print(io.dumps(doc))
    return 0


def cmd_param(args):
    w = io.load_multivector(io.read_json(args.infile))
    if args.mode == "symbolic":
        h = h_poly(w)
        doc = {
            "mode": "symbolic",
            "vars": w.p + 2,
            "h": io.dump_multipoly(h),
            "zero": h.is_zero(),
        }
        print(io.dumps(doc))
        return 0 if h.is_zero() else 10
    seed = _resolve_seed(args)
    v = h_probabilistic(w, trials=args.trials, seed=seed, prime=args.prime)
    doc = {
        "mode": "random",
        "verdict": v.kind,
        "point": list(v.point) if v.point else None,
        "value": str(int(v.value)) if v.value is not None else None,
        "trials": v.trials_run,
        "seed": v.seed,
        "prime": v.prime,
    }
    print(io.dumps(doc))
    return 10 if v.nonzero else 0


_BENCH_SEED_STRIDE = 1000003


def _bench_sample(field, n, p, seed, k):
    kinds = ["decomposable"] + [("two_term", d) for d in range(p)] + ["dense"]
    rng = random.Random(seed * _BENCH_SEED_STRIDE + k)
    kind = kinds[k % len(kinds)]
    if kind == "decomposable":
        return random_decomposable(rng, field, n, p)
    if kind == "dense":
        return random_dense(rng, field, n, p)
    return two_term_sum(rng, field, n, p, kind[1])


def _bench_worker(payload):
    field_flag, n, p, seed, k, methods, prime, trials = payload
    field = Field.from_flag(field_flag)
    w = _bench_sample(field, n, p, seed, k)
    out = []
    for m in methods:
        verdict = decide(w, methods=(m,), seed=seed, prime=prime, trials=trials)
        out.append((m, verdict.decomposable, verdict.timings[m]))
    return out


def cmd_bench(args):
    if args.backend != "auto":
        kernels.use(args.backend)
    field = Field.from_flag(args.field)
    p, n = args.p, args.n
    seed = _resolve_seed(args)
    if args.methods:
        methods = _parse_methods(args.methods)
    else:
        methods = ["bruteforce", "rank6", "pluecker"]
        if n >= p + 2:
            methods.append("param-random")
            if n <= 8:
                methods.append("param-symbolic")
        methods = tuple(methods)
    payloads = [
        (args.field, n, p, seed, k, methods, args.prime, args.trials)
        for k in range(args.samples)
    ]
    if args.jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(args.jobs) as pool:
            results = pool.map(_bench_worker, payloads)
    else:
        results = [_bench_worker(pl) for pl in payloads]
    stats = {m: {"yes": 0, "no": 0, "probably_yes": 0, "us": []} for m in methods}
    for sample in results:
        for m, state, micros in sample:
            stats[m][state] += 1
            stats[m]["us"].append(micros)
    out = open(args.out, "w", encoding="utf-8", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(out, lineterminator="\n")
        header = ["method", "backend", "samples", "yes", "no", "probably_yes"]
        if not args.no_timings:
            header += ["total_us", "mean_us", "min_us", "max_us"]
        writer.writerow(header)
        for m in methods:
            s = stats[m]
            row = [m, kernels.BACKEND, args.samples, s["yes"], s["no"], s["probably_yes"]]
            if not args.no_timings:
                us = s["us"]
                row += [sum(us), sum(us) // max(len(us), 1), min(us), max(us)]
            writer.writerow(row)
    finally:
        if args.out:
            out.close()
    return 0


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="grasskit",
        description="Exact decomposability toolkit for sparse exterior-power elements.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_field(sp):
        sp.add_argument("--field", default="rational",
                        help="coefficient field: rational or prime:Q (default rational)")

    sp = sub.add_parser("relations", help="stream a relation family as JSON lines")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--set", choices=("pluecker", "rank6"), required=True)
    sp.add_argument("--forms", action="store_true", help="attach expanded quadratic forms")
    sp.add_argument("--out", help="write JSON lines to a file instead of stdout")
    add_field(sp)
    sp.set_defaults(func=cmd_relations)

    sp = sub.add_parser("count", help="closed-formula family sizes")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--verify", action="store_true", help="also count by enumeration")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("decide", help="decide decomposability of a stored multivector")
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--method", default="bruteforce,rank6,pluecker",
                    help="comma-separated method list, run in order")
    sp.add_argument("--cross-check", action="store_true",
                    help="run all methods and fail on disagreement")
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--prime", type=int, default=1000003)
    sp.add_argument("--trials", type=int, default=5)
    sp.add_argument("--no-timings", action="store_true",
                    help="omit wall-clock timings for byte-stable output")
    sp.set_defaults(func=cmd_decide)

    sp = sub.add_parser("witness", help="produce a violated-relation certificate")
    sp.add_argument("--in", dest="infile", required=True)
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("expand", help="integer-combination expansion of a rank6 triple")
    sp.add_argument("--triple", required=True)
    sp.add_argument("--n", type=int, default=None,
                    help="ambient dimension (default: largest index in the triple)")
    add_field(sp)
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("gcpmap", help="the fold/select matrices and pullback sign of a triple")
    sp.add_argument("--triple", required=True)
    sp.add_argument("--n", type=int, required=True)
    add_field(sp)
    sp.set_defaults(func=cmd_gcpmap)

    sp = sub.add_parser("param", help="parametric criterion, symbolic or randomized")
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--mode", choices=("symbolic", "random"), required=True)
    sp.add_argument("--trials", type=int, default=5)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--prime", type=int, default=1000003)
    sp.set_defaults(func=cmd_param)

    sp = sub.add_parser("bench", help="per-method timing and violation statistics (CSV)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--samples", type=int, required=True)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--methods", default=None,
                    help="comma-separated override of the benchmarked methods")
    sp.add_argument("--backend", choices=("auto", "python", "c"), default="auto",
                    help="force a kernel backend (default: compiled when available)")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes for samples")
    sp.add_argument("--prime", type=int, default=1000003)
    sp.add_argument("--trials", type=int, default=5)
    sp.add_argument("--out", help="write CSV to a file instead of stdout")
    sp.add_argument("--no-timings", action="store_true",
                    help="omit timing columns for byte-stable output")
    add_field(sp)
    sp.set_defaults(func=cmd_bench)

    return ap


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except ConsistencyError as exc:
        print(io.dumps({"error": "consistency", "message": str(exc), "reports": exc.reports}))
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except GrasskitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command-line front end.

Subcommands: canon, verify, rank, distance, gray, oracle, tables.
Exit codes: 0 success, 1 computation budget exceeded (or table diff
failure), 2 input error.  Errors also go to stderr as one-line JSON.
JSON payloads carry no timestamps, so identical inputs produce
byte-identical reports.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys

from .analysis import (
    distance_prime_power,
    gray_params,
    hamming_distance,
    padic_classify,
    rank_and_spanning_set,
)
from .code import canonical_generators, code_to_json, span_closure, tower_ideal
from .exprs import GeneratorExpr, ParseError, UnboundConstantError
from .gfpoly import is_prime
from .oracle import (
    BudgetExceededError,
    DEFAULT_BUDGET,
    enumerate_codewords,
    min_weight,
)
from . import tables as tables_mod

MAX_PRIME = 13
MAX_LENGTH = 64


class InputError(ValueError):
    pass


def _add_common(sub, with_budget=True, with_sweep=False):
    sub.add_argument("-p", type=int, required=True, help="prime modulus (<= 13)")
    sub.add_argument("-n", type=int, required=True, help="code length (1..64)")
    sub.add_argument("--set", action="append", default=[], metavar="NAME=VAL",
                     help="bind a free constant, e.g. --set c0=1 (repeatable)")
    if with_budget:
        sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                         help=f"codeword enumeration cap (default {DEFAULT_BUDGET})")
    if with_sweep:
        sub.add_argument("--sweep", action="store_true",
                         help="sweep all bindings of free constants and report the observed set")
        sub.add_argument("--sweep-cap", type=int, default=tables_mod.DEFAULT_SWEEP_CAP,
                         help="max bindings per sweep before sampling")
    sub.add_argument("--json", action="store_true", help="machine-readable output")
    sub.add_argument("generators", nargs="+", metavar="GEN",
                     help="generator expression, e.g. 'vw*g^2+(c0+c1*x)*uvw'")


def _parse_sets(pairs, p):
    out = {}
    for item in pairs:
        if "=" not in item:
            raise InputError(f"--set expects NAME=VAL, got {item!r}")
        name, _, val = item.partition("=")
        try:
            out[name.strip()] = int(val)
        except ValueError:
            raise InputError(f"--set value for {name!r} is not an integer") from None
    for name, val in out.items():
        if not 0 <= val < p:
            raise InputError(f"--set {name}={val} out of range [0, {p})")
    return out


def _validate(p, n):
    if not is_prime(p) or p > MAX_PRIME:
        raise InputError(f"p must be a prime <= {MAX_PRIME}, got {p}")
    if not 1 <= n <= MAX_LENGTH:
        raise InputError(f"n must be in 1..{MAX_LENGTH}, got {n}")


def _exprs(args):
    return [GeneratorExpr.parse(t) for t in args.generators]


def _build_code(args, bindings):
    exprs = _exprs(args)
    gens = [e.evaluate(args.p, args.n, bindings) for e in exprs]
    return span_closure(args.p, args.n, gens)


def _sweep_bindings(exprs, p, cap, seed=tables_mod.SWEEP_SEED):
    consts = sorted(
        set().union(*[set(e.constants()) for e in exprs]),
        key=lambda s: (("'" in s), int(s.lstrip("c'"))),
    )
    if not consts:
        return [dict()], False
    if p ** len(consts) <= cap:
        return [
            dict(zip(consts, v)) for v in itertools.product(range(p), repeat=len(consts))
        ], False
    rng = random.Random(seed)
    picks = [dict.fromkeys(consts, 0), dict.fromkeys(consts, 1)]
    picks += [{c: rng.randrange(p) for c in consts} for _ in range(cap - 2)]
    return picks, True


def _emit(payload, args, text_fn):
    if args.json:
        print(json.dumps(payload, separators=(",", ":")))
    else:
        text_fn(payload)


def cmd_canon(args):
    code = _build_code(args, _parse_sets(args.set, args.p))
    cg = canonical_generators(code)
    payload = code_to_json(code, cg)
    payload["dim"] = code.dim

    def text(pl):
        print(f"cyclic code over R_{args.n}, p={args.p}: dim {pl['dim']}")
        for i in range(1, 9):
            gen = cg.generator(i)
            if gen is None:
                print(f"  A_{i}: absent (f_{i} = x^{args.n} - 1)")
            else:
                print(f"  A_{i} = {gen}   [f_{i} = {cg.f_poly(i)}, t_{i} = {cg.t[i-1]}]")

    _emit(payload, args, text)
    return 0


def cmd_verify(args):
    code = _build_code(args, _parse_sets(args.set, args.p))
    cg = canonical_generators(code)
    report = verify_report(cg)

    def text(pl):
        for c in pl:
            holds = {True: "holds", False: "VIOLATED", None: "not evaluable"}[c["holds"]]
            print(f"condition {c['condition']:>2}: {c['status']:<20} {holds}"
                  + (f"  ({c['detail']})" if c["detail"] else ""))

    _emit(report, args, text)
    return 0


def verify_report(cg):
    from .code import verify_conditions

    return verify_conditions(cg).to_json()


def cmd_rank(args):
    bindings = _parse_sets(args.set, args.p)
    exprs = _exprs(args)
    if args.sweep:
        picks, sampled = _sweep_bindings(exprs, args.p, args.sweep_cap)
        observed = {}
        for b in picks:
            merged = {**b, **bindings}
            code = span_closure(args.p, args.n, [e.evaluate(args.p, args.n, merged) for e in exprs])
            cg = canonical_generators(code)
            rep = rank_and_spanning_set(cg)
            d = hamming_distance(code, args.budget)
            observed[(rep.rank, d)] = observed.get((rep.rank, d), 0) + 1
        payload = {
            "sweep": True,
            "sampled": sampled,
            "bindings": len(picks),
            "observed": [
                {"rank": r, "d": d, "count": c}
                for (r, d), c in sorted(observed.items())
            ],
        }
        _emit(payload, args, lambda pl: [
            print(f"rank {o['rank']}, d {o['d']}: {o['count']} binding(s)")
            for o in pl["observed"]
        ])
        return 0
    code = _build_code(args, bindings)
    cg = canonical_generators(code)
    rep = rank_and_spanning_set(cg)
    payload = rep.to_json()
    payload["spanning_set"] = [str(b) for b in rep.spanning_set]

    def text(pl):
        print(f"rank {pl['rank']}  counts {pl['counts']}  t {pl['t']}")
        for b in pl["spanning_set"]:
            print(f"  {b}")

    _emit(payload, args, text)
    return 0


def cmd_distance(args):
    code = _build_code(args, _parse_sets(args.set, args.p))
    cg = canonical_generators(code)
    p, n = args.p, args.n
    is_pl = n >= p and _is_power(n, p)
    if is_pl:
        d = distance_prime_power(cg)
        t8 = cg.t[7]
        payload = {"distance": d, "method": "theorem", "t8": t8}
        if 0 < t8 and t8 > p ** (_log_int(n, p) - 1):
            payload["padic"] = padic_classify(t8, p, _log_int(n, p)).to_json()
    else:
        d = hamming_distance(code, args.budget)
        payload = {"distance": d, "method": "enumeration-c8",
                   "f8": tower_ideal(code, 8).to_json()}
    _emit(payload, args, lambda pl: print(f"d(C) = {pl['distance']}  [{pl['method']}]"))
    return 0


def _is_power(n, p):
    while n % p == 0:
        n //= p
    return n == 1


def _log_int(n, p):
    l = 0
    while n > 1:
        n //= p
        l += 1
    return l


def cmd_gray(args):
    code = _build_code(args, _parse_sets(args.set, args.p))
    gp = gray_params(code, args.budget)
    payload = gp.to_json()
    _emit(payload, args, lambda pl: print(
        f"[{pl['length']},{pl['dimension']},{pl['distance']}]"
        + ("" if pl["exact"] else " (upper bound, budget exceeded)")
    ))
    return 0 if gp.exact else 1


def cmd_oracle(args):
    code = _build_code(args, _parse_sets(args.set, args.p))
    q = args.quantity
    if q == "count":
        total = 0
        for _ in enumerate_codewords(code, args.budget):
            total += 1
        payload = {"quantity": "count", "codewords": total, "dim": code.dim}
    elif q in ("hamming", "lee"):
        res = min_weight(code, metric=q, budget=args.budget)
        payload = {"quantity": q, "min_weight": res.weight, "exact": res.exact,
                   "codewords": res.codewords}
        if res.seed is not None:
            payload["seed"] = res.seed
    else:  # gray
        gp = gray_params(code, args.budget)
        payload = {"quantity": "gray", **gp.to_json()}
    _emit(payload, args, lambda pl: print(json.dumps(pl)))
    exact = payload.get("exact", True)
    return 0 if exact else 1


def cmd_tables(args):
    wanted = set(args.table.split(",")) if args.table else None
    results = tables_mod.run_tables(
        tables=wanted, budget=args.budget, sweep_cap=args.sweep_cap
    )
    summary = tables_mod.summarize(results)
    payload = {"rows": [r.to_json() for r in results], "summary": summary}
    if args.json:
        print(json.dumps(payload, separators=(",", ":")))
    elif args.tsv:
        print("row\toutcome\texpected\tobserved\tstatus")
        for r in results:
            exp = (",".join(map(str, r.row.gray)) if r.row.gray
                   else f"rank {r.row.rank}, d {r.row.d}")
            print(f"{r.row.row_id}\t{r.outcome}\t{exp}\t{r.observed}\t{r.row.status}")
    else:
        for r in results:
            exp = (",".join(map(str, r.row.gray)) if r.row.gray
                   else f"rank {r.row.rank}, d {r.row.d}")
            extra = f" observed {r.observed}" if r.outcome == "mismatch" else ""
            note = f" [{r.row.status}]" if r.row.status != "ok" else ""
            print(f"{r.row.row_id:>6}  {r.outcome:<8} expected {exp}{extra}{note}")
        print("summary:", json.dumps(summary))
    bad = summary["mismatch"] + summary["budget"]
    return 1 if bad else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nilcyclic",
        description="Cyclic codes over F_p[u,v,w]/(u^2,v^2,w^2): canonical generators, "
                    "rank, distance, Gray images",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("canon", help="canonical generators A_1..A_8")
    _add_common(sub, with_budget=False)
    sub.set_defaults(func=cmd_canon)

    sub = subs.add_parser("verify", help="divisibility condition report")
    _add_common(sub, with_budget=False)
    sub.set_defaults(func=cmd_verify)

    sub = subs.add_parser("rank", help="rank and minimal spanning set")
    _add_common(sub, with_budget=True, with_sweep=True)
    sub.set_defaults(func=cmd_rank)

    sub = subs.add_parser("distance", help="Hamming distance (theorem or enumeration)")
    _add_common(sub)
    sub.set_defaults(func=cmd_distance)

    sub = subs.add_parser("gray", help="Gray image parameters [8n,k,d]")
    _add_common(sub)
    sub.set_defaults(func=cmd_gray)

    sub = subs.add_parser("oracle", help="brute-force ground truth")
    sub.add_argument("--quantity", choices=("count", "hamming", "lee", "gray"),
                     default="gray")
    _add_common(sub)
    sub.set_defaults(func=cmd_oracle)

    sub = subs.add_parser("tables", help="re-derive the published tables and diff")
    sub.add_argument("--table", help="comma-separated table ids, e.g. t1,t2")
    sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sub.add_argument("--sweep-cap", type=int, default=tables_mod.DEFAULT_SWEEP_CAP)
    sub.add_argument("--json", action="store_true")
    sub.add_argument("--tsv", action="store_true")
    sub.set_defaults(func=cmd_tables)

    return parser


def _fail(code: int, kind: str, message: str, **extra) -> int:
    err = {"error": {"kind": kind, "message": message, **extra}}
    print(json.dumps(err, separators=(",", ":")), file=sys.stderr)
    return code


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if hasattr(args, "p"):
            _validate(args.p, args.n)
        return args.func(args)
    except BudgetExceededError as exc:
        extra = {}
        if exc.upper_bound is not None:
            extra["upper_bound"] = exc.upper_bound
        return _fail(1, "budget", str(exc), **extra)
    except UnboundConstantError as exc:
        return _fail(2, "unbound-constants", str(exc), names=list(exc.names))
    except ParseError as exc:
        return _fail(2, "syntax", str(exc), position=exc.pos)
    except (InputError, ValueError) as exc:
        return _fail(2, "input", str(exc))


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end.

Subcommands: classify (report the proper extensions of a named group),
verify (replay bundled certificates / nonexistence rows), formula (evaluate
the arithmetic kernels), metacyclic (covering-subgroup enumeration), and
search (regenerate a certificate).  Exit codes: 0 success/verified, 1
verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import tables
from .arith import LieParams, is_full_period, ldc_example_params, phi_k, rank1_classify
from .classify import ClassificationReport, full_classify, resolve_group
from .errors import SearchBudgetExceeded, ValidationError
from .metacyclic import MetacyclicSpec, derive_d, enumerate_covers
from .verify import (Certificate, certificate_for, load_certificates,
                     search_subgroup, verify_certificate, verify_nonexistence,
                     exhaustive_verify_small)

NONEXISTENCE_SUITE = (
    ["Alt(%d)" % d for d in range(3, 8)] + ["Sym(%d)" % d for d in range(3, 8)]
    + ["PSL2(11)@11", "Alt(7)@15", "PGammaL2(8)@28", "M11@12", "M12",
       "M22", "M22:2", "M23", "M24"])


def _emit(args, payload, human_lines):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def cmd_classify(args):
    if args.group:
        rep = full_classify(args.group)
    else:
        if not args.family:
            print("classify needs --group or --family", file=sys.stderr)
            return 2
        lp = LieParams(args.family.upper() if args.family.upper() != "PSL2"
                       else "PSL2", args.p, args.e, t_G=args.tg, e_G=args.eg,
                       r_G=args.rg)
        rep = full_classify(lp)
    lines = [f"group: {rep.group}", f"case: {rep.case}",
             f"k>=3: {rep.k3_verdict}"]
    if rep.eliminated_by:
        lines.append(f"eliminated by: {rep.eliminated_by}")
    for a in rep.actions:
        extra = f" pf={a.pf_params}" if a.pf_params else ""
        classes = "?" if a.classes is None else a.classes
        lines.append(f"  {a.kind:12s} block={a.block_size:<6d} "
                     f"classes={classes} pair={a.pair_order} "
                     f"sharp={a.sharp}{extra} [{a.source}]")
    _emit(args, rep.to_json(), lines)
    return 0


def _parse_rows(spec, upper):
    if not spec:
        return list(range(1, upper + 1))
    out = []
    for part in spec.split(","):
        if "-" in part:
            a, b = part.split("-")
            out.extend(range(int(a), int(b) + 1))
        else:
            out.append(int(part))
    return out


def cmd_verify(args):
    results = {}
    ok = True
    if args.certificate:
        cert = Certificate.loads(open(args.certificate).read())
        res = verify_certificate(cert, deep=args.deep,
                                 max_index=args.max_index)
        results[cert.table_ref] = res
        ok &= res.ok
    elif args.table == "exceptional":
        rows = _parse_rows(args.rows, len(tables.TABLE1))
        for r in rows:
            ref = f"Table1:row{r}"
            cert = certificate_for(ref, args.certs)
            res = verify_certificate(cert, deep=args.deep,
                                     max_index=args.max_index)
            results[ref] = res
            ok &= res.ok
    elif args.table == "small_q":
        rows = _parse_rows(args.rows, len(tables.TABLE2))
        for r in rows:
            ref = f"Table2:row{r}"
            if r <= 5:
                from .verify import VerificationResult
                row = tables.TABLE2[r - 1]
                found = exhaustive_verify_small(row.group)
                good = (row.block_size, row.pair_order) in found
                results[ref] = VerificationResult(
                    "verified-brute-force" if good else "failed",
                    {"rows": found}, 0.0, None if good else "row missing")
                ok &= good
            else:
                cert = certificate_for(ref, args.certs)
                res = verify_certificate(cert, deep=args.deep,
                                         max_index=args.max_index)
                results[ref] = res
                ok &= res.ok
    elif args.table == "nonexistence":
        for name in NONEXISTENCE_SUITE:
            res = verify_nonexistence(name, seed=args.seed)
            results[name] = res
            ok &= res.ok
    else:
        print("verify needs --table or --certificate", file=sys.stderr)
        return 2
    payload = {k: {"status": r.status, "measured": r.measured,
                   "wall_time": round(r.wall_time, 3), "failure": r.failure}
               for k, r in results.items()}
    lines = [f"{k}: {r.status}"
             + (f" ({r.failure})" if r.failure else "")
             for k, r in results.items()]
    _emit(args, payload, lines)
    return 0 if ok else 1


def cmd_formula(args):
    if args.which == "phi_k":
        val = phi_k(args.k, args.t)
        _emit(args, {"phi_k": val}, [str(val)])
    elif args.which == "full_period":
        val = is_full_period(args.a, args.n)
        _emit(args, {"full_period": val}, [str(val).lower()])
    elif args.which == "ldc_params":
        out = ldc_example_params(args.p, args.n)
        if out is None:
            _emit(args, {"m": None}, ["no odd-order parameter exists"])
        else:
            m, q = out
            _emit(args, {"m": m, "q": str(q)}, [f"m={m} q={args.p}^{m*args.n}"])
    elif args.which == "rank1":
        lp = LieParams(args.family, args.p, args.e, t_G=args.tg, e_G=args.eg,
                       r_G=args.rg)
        rep = rank1_classify(lp)
        payload = {"d_G": rep.d_G, "o_G": rep.o_G,
                   "h": {str(k): v for k, v in rep.h.items()}}
        _emit(args, payload,
              [f"d_G={rep.d_G} o_G={rep.o_G} " +
               " ".join(f"h_{k}={v}" for k, v in sorted(rep.h.items()))])
    return 0


def cmd_metacyclic(args):
    spec = MetacyclicSpec(N=args.N, m=args.m, a=args.a, rprime=args.rprime,
                          k=args.k, l=args.l)
    d0, d = derive_d(spec)
    out = {"d0": d0, "d": d, "covers": {}}
    lines = [f"d0={d0} d={d}"]
    ns = ([args.n] if args.n else
          [n for n in range(1, min(spec.order, 49) + 1) if spec.order % n == 0])
    for n in ns:
        ce = enumerate_covers(spec, n)
        out["covers"][str(n)] = {"count": ce.subgroup_count,
                                 "classes": ce.class_count}
        if ce.subgroup_count or args.n:
            lines.append(f"n={n}: count={ce.subgroup_count} "
                         f"classes={ce.class_count}")
    _emit(args, out, lines)
    return 0


def cmd_search(args):
    try:
        cert = search_subgroup(args.group, args.index, predicate=args.predicate,
                               seed=args.seed, table_ref=args.ref)
    except SearchBudgetExceeded as exc:
        print(f"not found: {exc}", file=sys.stderr)
        return 1
    text = cert.dumps()
    if args.out:
        open(args.out, "w").write(text)
    _emit(args, {"certificate": text},
          [text.rstrip()])
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="blocktrans",
        description="classify and verify block-transitive extensions of "
                    "finite 2-transitive groups")
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.add_argument("--seed", type=int, default=0)
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("classify", help="report proper extensions")
    c.add_argument("--group", help="catalog name, e.g. PGL3(5), M11, Sz(8)")
    c.add_argument("--family", help="raw parameters: family name")
    c.add_argument("--p", type=int)
    c.add_argument("--e", type=int)
    c.add_argument("--q", type=int, help="alternative to --p/--e (prime power)")
    c.add_argument("--tg", type=int, default=1)
    c.add_argument("--eg", type=int, default=1)
    c.add_argument("--rg", type=int, default=0)
    c.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify", help="replay certificates / eliminations")
    v.add_argument("--table", choices=("exceptional", "small_q",
                                       "nonexistence"))
    v.add_argument("--rows", help="e.g. 1-6 or 1,3,5")
    v.add_argument("--certificate", help="path to a certificate file")
    v.add_argument("--certs", help="certificate directory override")
    v.add_argument("--deep", action="store_true",
                   help="brute-force rows that default to order-only")
    v.add_argument("--max-index", type=int, default=100_000)
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("formula", help="evaluate the arithmetic kernels")
    fsub = f.add_subparsers(dest="which", required=True)
    f1 = fsub.add_parser("phi_k")
    f1.add_argument("--k", type=int, required=True)
    f1.add_argument("--t", type=int, required=True)
    f2 = fsub.add_parser("full_period")
    f2.add_argument("--a", type=int, required=True)
    f2.add_argument("--n", type=int, required=True)
    f3 = fsub.add_parser("ldc_params")
    f3.add_argument("--p", type=int, required=True)
    f3.add_argument("--n", type=int, required=True)
    f4 = fsub.add_parser("rank1")
    f4.add_argument("--family", required=True)
    f4.add_argument("--p", type=int, required=True)
    f4.add_argument("--e", type=int, required=True)
    f4.add_argument("--tg", type=int, default=1)
    f4.add_argument("--eg", type=int, default=1)
    f4.add_argument("--rg", type=int, default=0)
    f.set_defaults(func=cmd_formula)

    m = sub.add_parser("metacyclic", help="covering-subgroup enumeration")
    m.add_argument("--N", type=int, required=True)
    m.add_argument("--m", type=int, required=True)
    m.add_argument("--a", type=int, required=True)
    m.add_argument("--rprime", type=int, default=0)
    m.add_argument("--k", type=int, default=0)
    m.add_argument("--l", type=int, default=0)
    m.add_argument("--n", type=int, help="single index to enumerate")
    m.set_defaults(func=cmd_metacyclic)

    s = sub.add_parser("search", help="regenerate a certificate")
    s.add_argument("--group", required=True)
    s.add_argument("--index", type=int, required=True,
                   help="index in the block stabilizer")
    s.add_argument("--predicate", choices=("transitive", "2bbt"),
                   default="2bbt")
    s.add_argument("--ref", default="search")
    s.add_argument("--out")
    s.set_defaults(func=cmd_search)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.cmd == "classify" and args.q and not args.p:
        from .classify import _prime_power
        args.p, args.e = _prime_power(args.q)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

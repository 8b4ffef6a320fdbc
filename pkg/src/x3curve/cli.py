"""Command-line front end: x3 info|semigroup|census|verify|polys.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

import argparse
import json
import sys

from . import autgrp, weierstrass
from .curve.classify import classify
from .curve.params import CurveParams
from .curve.points import parse_point
from .curve.pq import pq_poly
from .curve.sampling import sample_points
from .errors import X3Error
from .oracle import oracle_gaps
from .verify import SUITES, run_suites

# orders of the full automorphism group where it exceeds G
EXCEPTIONAL_AUT = {5: 360, 8: 648}


class UsageError(Exception):
    pass


def _params(q):
    try:
        return CurveParams(q)
    except X3Error as exc:
        raise UsageError("invalid q = %s: %s" % (q, exc))


def _dump(obj):
    return json.dumps(obj, sort_keys=True, indent=2)


def cmd_info(args):
    params = _params(args.q)
    rep = weierstrass.census(params)
    wc = weierstrass.weierstrass_count(params)
    G = autgrp.group_order(params)
    notes = []
    if params.q in EXCEPTIONAL_AUT:
        notes.append("Aut order %d exceeds G order %d" % (EXCEPTIONAL_AUT[params.q], G))
    else:
        notes.append("Aut = G for q >= 11 (cited result, not computed)")
    info = {
        "q": params.q, "p": params.p, "n": params.n, "m": params.m, "genus": params.genus,
        "rational_points": params.n_rational_points,
        "group_order": G,
        "census": rep.to_json(),
        "weierstrass_count": wc.to_json(),
        "all_weierstrass_rational": weierstrass.all_weierstrass_rational(params),
        "notes": notes,
    }
    if args.format == "json":
        print(_dump(info))
    else:
        print("q=%d p=%d n=%d m=%d g=%d" % (params.q, params.p, params.n, params.m, params.genus))
        print("|G|=%d" % G)
        print("rational points=%d" % params.n_rational_points)
        for r in rep.rows:
            print("  %-28s %-28s %d" % (r.label, "<%s>" % ",".join(map(str, r.semigroup.generators)), r.count))
        print("W=%d (rational %d, asymptotic estimate %.1f)" % (wc.exact, wc.rational, wc.asymptotic))
        print("all Weierstrass points rational: %s" % info["all_weierstrass_rational"])
        for note in notes:
            print("note: %s" % note)
    return 0


def _resolve_point(args, params):
    spec = args.point
    if spec is None:
        raise UsageError("--point is required")
    if spec.startswith("sample:"):
        # sample:<class label>:<index>, drawn with --seed over --ext
        try:
            _, label, idx = spec.split(":")
            idx = int(idx)
        except ValueError:
            raise UsageError("sample spec is sample:<class>:<index>")
        try:
            pts = sample_points(label, params, idx + 1, seed=args.seed, k=args.ext)
        except (X3Error, ValueError) as exc:
            raise UsageError(str(exc))
        if idx >= len(pts):
            raise UsageError("only %d points of class %s" % (len(pts), label))
        return pts[idx]
    if args.ext and "ext=" not in spec and spec not in ("O0", "Oinf"):
        spec = "%s;ext=%d" % (spec, args.ext)
    try:
        return parse_point(spec, params)
    except (X3Error, ValueError) as exc:
        raise UsageError("bad point %r: %s" % (spec, exc))


def cmd_semigroup(args):
    params = _params(args.q)
    P = _resolve_point(args, params)
    cls = classify(P, params)
    S = weierstrass.semigroup_at(cls, params)
    out = {"point": P.to_text(), "class": cls.to_json(), "semigroup": S.to_json()}
    code = 0
    if args.oracle:
        rep = oracle_gaps(P)
        out["oracle"] = rep.to_json()
        if not rep.matched_closed_form:
            code = 1
    if args.format == "json":
        print(_dump(out))
    else:
        print("point: %s" % out["point"])
        print("class: %s" % cls.label)
        print("semigroup: <%s>" % ",".join(map(str, S.generators)))
        print("gaps: %s" % " ".join(map(str, S.gaps)))
        if args.oracle:
            print("oracle gaps: %s" % " ".join(map(str, out["oracle"]["gaps"])))
            print("matched: %s" % out["oracle"]["matched_closed_form"])
    return code


def cmd_census(args):
    params = _params(args.q)
    rep = weierstrass.census(params)
    if args.format == "json":
        print(_dump(rep.to_json()))
    elif args.format == "csv":
        print(rep.to_csv())
    else:
        for r in rep.rows:
            print("%-28s <%s> %d" % (r.label, ",".join(map(str, r.semigroup.generators)), r.count))
        print("total %d" % rep.total)
    print("identity q^2+1+2qg=%d: %s" % (rep.expected_total, "ok" if rep.identity_holds else "FAILED"),
          file=sys.stderr if args.format == "json" else sys.stdout)
    return 0 if rep.identity_holds else 1


def cmd_verify(args):
    params = _params(args.q)
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError("unknown suite %r" % args.suite)
    as_json = args.format == "json"
    stream = sys.stderr if as_json else sys.stdout

    def progress(suite, check):
        print("[%s] %s: %s" % (suite, check["status"].upper(), check["name"]), file=stream, flush=True)
        if check["status"] == "fail":
            print("    repro: --q %d --seed %d %s" % (params.q, args.seed, json.dumps(check["detail"], sort_keys=True)),
                  file=stream)

    report = run_suites(params, args.suite, args.seed, args.samples, args.kmax, progress=progress)
    if as_json:
        print(_dump(report))
    else:
        c = report["counts"]
        print("%s: %d passed, %d failed, %d skipped" % ("PASS" if report["passed"] else "FAIL",
                                                        c["pass"], c["fail"], c["skip"]))
    return 0 if report["passed"] else 1


def cmd_polys(args):
    params = _params(args.q)
    K = params.field(args.ext or 1)
    top = args.max_index or params.m
    out = {"field": "F_%d^%d" % (K.p, K.e), "zeta3": K.zeta3.to_text(), "P": {}, "Q": {}}
    for i in range(1, top + 1):
        for w in "PQ":
            out[w][str(i)] = [c.to_text() for c in pq_poly(w, i, K)]
    if args.format == "json":
        print(_dump(out))
    else:
        print("field %s, zeta3 = %s (coefficients low degree first)" % (out["field"], out["zeta3"]))
        for i in range(1, top + 1):
            for w in "PQ":
                print("%s_%d: %s" % (w, i, " ".join(out[w][str(i)])))
    return 0


COMMANDS = {"info": cmd_info, "semigroup": cmd_semigroup, "census": cmd_census,
            "verify": cmd_verify, "polys": cmd_polys}


def build_parser():
    parser = argparse.ArgumentParser(prog="x3", description="Weierstrass semigroups on the curve "
                                     "y^(q+1) + x^(2m) + x^m = 0")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--q", type=int, required=True)
    parser.add_argument("--ext", type=int, default=None, help="extension degree k of F_{q^2k}")
    parser.add_argument("--point", help='"a=<coords>;b=<coords>;ext=k", O0, Oinf or sample:<class>:<index>')
    parser.add_argument("--oracle", action="store_true", help="also compute gaps by the canonical-space oracle")
    parser.add_argument("--suite", default="all", help="all or one of: %s" % ", ".join(SUITES))
    parser.add_argument("--samples", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--kmax", type=int, default=12, help="extension search bound for sampling")
    parser.add_argument("--max-index", type=int, default=None, help="largest i printed by polys")
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--json", action="store_true", help="same as --format json")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.json:
        args.format = "json"
    if args.ext is not None and args.ext < 1:
        parser.error("--ext must be positive")
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print("x3: error: %s" % exc, file=sys.stderr)
        return 2
    except (X3Error, AssertionError, ArithmeticError) as exc:
        print("x3: verification failure: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

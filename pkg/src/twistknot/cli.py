"""Command-line front end.

Exit codes: 0 success or verified, 1 verification failed, 2 invalid
input.  Reports are JSON by default (``--format text`` for the
human-readable form) and carry the tool version plus the convention
fingerprint so output from different implementations can be compared.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import CONVENTIONS, __version__, braid, modarith, suite, tangles
from .alexander import alexander_from_braid
from .families import (FamilyParams, OracleBudgetError, TwistedTorusParams,
                       cable_detect, composite_base, construction_braid,
                       family_membership, fusion_description, twisted_params,
                       verify_family_instance)

_TOOL = {"name": "twistknot", "version": __version__, "conventions": CONVENTIONS}


def _emit(payload: dict, fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps({**payload, "tool": _TOOL}, indent=2))
    else:
        print(text)


def _family_params(args) -> FamilyParams:
    return FamilyParams(args.e, args.k1, args.k2, args.x1, args.x2)


def _read_braid(path: str) -> braid.BraidWord:
    if path == "-":
        return braid.parse_word(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return braid.parse_word(fh.read())


def _braid_payload(w: braid.BraidWord) -> dict:
    return {"strands": w.strands, "letters": list(w.letters)}


def cmd_coeffs(args) -> int:
    quad = modarith.coeff_quadruple(args.p0, args.q0)
    _emit(quad.as_dict(), args.format,
          f"({args.p0}, {args.q0}): a={quad.a} b={quad.b} c={quad.c} d={quad.d}")
    return 0


def cmd_trace(args) -> int:
    part = modarith.trace_arc_slots(args.p0, args.q0)
    _emit(part.as_dict(), args.format,
          f"s1: {' '.join(map(str, part.s1))}\ns2: {' '.join(map(str, part.s2))}")
    return 0


def cmd_build(args) -> int:
    if args.kind == "torus":
        word = braid.torus_braid(args.p, args.q)
    elif args.kind == "twisted":
        word = braid.twisted_torus_braid(args.p, args.q, args.r, args.s)
    else:
        word = construction_braid(_family_params(args))
    _emit(_braid_payload(word), args.format, braid.format_word(word).rstrip("\n"))
    return 0


def cmd_alexander(args) -> int:
    word = _read_braid(args.braid)
    poly = alexander_from_braid(word)
    payload = {**poly.to_json(), "string": str(poly)}
    _emit(payload, args.format, str(poly))
    return 0


def cmd_family(args) -> int:
    if args.action == "params":
        tp = twisted_params(_family_params(args))
        _emit(tp.as_dict(), args.format,
              f"T({tp.p}, {tp.q}; {tp.r}, {tp.s})")
        return 0
    if args.action == "fusion":
        fp = _family_params(args)
        fd = fusion_description(fp)
        base = composite_base(fp.e, fp.k1, fp.k2)
        payload = {**fd.as_dict(), "base": base.as_dict()}
        _emit(payload, args.format,
              f"{fd.strings}-string fusion of T{fd.factor_knot} and "
              f"T{fd.factor_link}; companion T{fd.companion}")
        return 0
    if args.action == "verify":
        report = verify_family_instance(_family_params(args),
                                        oracle_budget=args.budget)
        lines = [c.as_dict() for c in report.checks]
        text = "\n".join(f"{c['name']}: {c['status']} ({c['detail']})"
                         for c in lines) + f"\nverdict: {report.verdict}"
        _emit(report.as_dict(), args.format, text)
        return 0 if report.verdict == "verified" else 1
    # detect
    tp = TwistedTorusParams(args.p, args.q, args.r, args.s)
    members = family_membership(tp, max_e=args.max_e, max_k=args.max_k,
                                max_x=args.max_x)
    payload = {"params": tp.as_dict(),
               "bounds": {"max_e": args.max_e, "max_k": args.max_k,
                          "max_x": args.max_x},
               "members": [fp.as_dict() for fp in members]}
    text = ("no family membership within bounds" if not members else
            "\n".join(str(fp.as_dict()) for fp in members))
    _emit(payload, args.format, text)
    return 0


def cmd_cable(args) -> int:
    tp = TwistedTorusParams(args.p, args.q, args.r, args.s)
    desc = cable_detect(tp)
    if desc is None:
        _emit({"params": tp.as_dict(), "cable_structure": None,
               "message": "no cable structure"}, args.format, "no cable structure")
        return 0
    payload = {"params": tp.as_dict(), "cable_structure": desc.as_dict()}
    text = (f"({desc.cable[0]}, {desc.cable[1]})-cable over companion "
            f"T{desc.companion}" + (" [degenerate: unknot companion]"
                                    if desc.degenerate else ""))
    _emit(payload, args.format, text)
    return 0


def cmd_tangle(args) -> int:
    report = tangles.essentiality_report(tangles.TangleSpec(args.p, args.q, args.k))
    text = (f"t({args.p}, {args.q}; {args.k}): verdict {report.verdict}; "
            f"arcs {[list(a.params) for a in report.arcs.arcs]}; "
            f"class sizes {list(report.classes.sizes)}")
    _emit(report.as_dict(), args.format, text)
    return 0


def cmd_suite(args) -> int:
    only = set(s.strip().upper() for s in args.only.split(",")) if args.only else None
    results = suite.run_all(only)
    if args.format == "json":
        payload = {"results": [{"id": r.ident, "passed": r.passed,
                                "seconds": round(r.seconds, 3),
                                "limit": r.limit, "detail": r.detail}
                               for r in results],
                   "passed": all(r.passed for r in results)}
        print(json.dumps({**payload, "tool": _TOOL}, indent=2))
    else:
        for r in results:
            print(r.line())
    return 0 if results and all(r.passed for r in results) else 1


def _add_family_opts(sub, with_budget=False):
    sub.add_argument("--e", type=int, required=True)
    sub.add_argument("--k1", type=int, required=True)
    sub.add_argument("--k2", type=int, required=True)
    sub.add_argument("--x1", type=int, required=True)
    sub.add_argument("--x2", type=int, required=True)
    if with_budget:
        sub.add_argument("--budget", type=int, default=4,
                         help="maximum number of Alexander computations")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistknot",
        description="twisted torus knots: braids, invariants, verification")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("coeffs", help="coefficient quadruple of a coprime pair")
    s.add_argument("p0", type=int)
    s.add_argument("q0", type=int)
    s.set_defaults(func=cmd_coeffs)

    s = sub.add_parser("trace", help="slot itineraries of the two cut arcs")
    s.add_argument("p0", type=int)
    s.add_argument("q0", type=int)
    s.set_defaults(func=cmd_trace)

    s = sub.add_parser("build", help="construct a braid word")
    bsub = s.add_subparsers(dest="kind", required=True)
    b = bsub.add_parser("torus")
    b.add_argument("p", type=int)
    b.add_argument("q", type=int)
    b.set_defaults(func=cmd_build)
    b = bsub.add_parser("twisted")
    b.add_argument("p", type=int)
    b.add_argument("q", type=int)
    b.add_argument("r", type=int)
    b.add_argument("s", type=int)
    b.set_defaults(func=cmd_build)
    b = bsub.add_parser("parallel")
    _add_family_opts(b)
    b.set_defaults(func=cmd_build)

    s = sub.add_parser("alexander", help="Alexander polynomial of a braid closure")
    s.add_argument("--braid", required=True, metavar="PATH",
                   help="braid word file, or - for standard input")
    s.set_defaults(func=cmd_alexander)

    s = sub.add_parser("family", help="parameter family operations")
    fsub = s.add_subparsers(dest="action", required=True)
    for action in ("params", "fusion"):
        f = fsub.add_parser(action)
        _add_family_opts(f)
        f.set_defaults(func=cmd_family)
    f = fsub.add_parser("verify")
    _add_family_opts(f, with_budget=True)
    f.set_defaults(func=cmd_family)
    f = fsub.add_parser("detect")
    f.add_argument("p", type=int)
    f.add_argument("q", type=int)
    f.add_argument("r", type=int)
    f.add_argument("s", type=int)
    f.add_argument("--max-e", type=int, default=4)
    f.add_argument("--max-k", type=int, default=6)
    f.add_argument("--max-x", type=int, default=6)
    f.set_defaults(func=cmd_family)

    s = sub.add_parser("cable", help="cable structure detection")
    csub = s.add_subparsers(dest="action", required=True)
    c = csub.add_parser("detect")
    c.add_argument("p", type=int)
    c.add_argument("q", type=int)
    c.add_argument("r", type=int)
    c.add_argument("s", type=int)
    c.set_defaults(func=cmd_cable)

    s = sub.add_parser("tangle", help="cut-tangle report")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_tangle)

    s = sub.add_parser("suite", help="run the acceptance battery")
    s.add_argument("--only", default="",
                   help="comma-separated criterion ids, e.g. A1,A4")
    s.set_defaults(func=cmd_suite)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OracleBudgetError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

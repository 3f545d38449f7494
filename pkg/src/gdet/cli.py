"""Command-line entry point.

Subcommands: det, member, lambda, witness, verify-identities, scan, parse.
Exit codes: 0 success / membership yes, 1 domain no (non-member, failed
identity, scan violations), 2 usage or input error.  Every subcommand takes
--json for one-line machine-readable output with a stable schema tag.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import classify, detcalc, harness, sympoly, witness
from .groups import build_group
from .ring import ParseError, element_from_json, parse_expr

EXIT_OK = 0
EXIT_NO = 1
EXIT_ERROR = 2


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _load_element(args, group):
    if args.expr is not None:
        return parse_expr(args.expr, group)
    text = args.coeffs
    if not text.lstrip().startswith(("[", "{")):
        with open(text) as fh:
            text = fh.read()
    return element_from_json(json.loads(text), group)


def _cmd_det(args) -> int:
    group = build_group(args.group)
    elem = _load_element(args, group)
    if group.kind == "S4":
        profile = detcalc.s4_factors(elem)
        value = profile.det
    else:
        profile = None
        value = detcalc.det_exact(group, elem)
    if args.json:
        out = {"schema": "gdet-det/1", "group": group.kind,
               "coeffs": list(elem.coeffs), "det": value}
        if args.factors and profile is not None:
            out["factors"] = profile.as_dict()
        _emit(out)
    else:
        print(value)
        if args.factors and profile is not None:
            _emit(profile.as_dict())
    return EXIT_OK


def _cmd_member(args) -> int:
    rule = classify.parse_rule(args.group)
    verdict = classify.member(rule, args.m)
    out = {"schema": "gdet-member/1"}
    out.update(verdict.as_dict())
    _emit(out)
    return EXIT_OK if verdict.member else EXIT_NO


def _cmd_lambda(args) -> int:
    if args.scan_range:
        lo, hi = _parse_range(args.scan_range)
        support = None
        if args.support:
            support = tuple(int(s) for s in args.support.split(","))
        value = harness.lambda_scan(args.group, lo, hi, support=support)
        source = "scan"
    else:
        value = classify.lambda_of(classify.parse_rule(args.group))
        source = "rule"
    if args.json:
        _emit({"schema": "gdet-lambda/1", "group": args.group,
               "lambda": value, "source": source})
    else:
        print(value if value is not None else "none found")
    return EXIT_OK if value is not None else EXIT_NO


def _cmd_witness(args) -> int:
    try:
        cert = witness.synthesize(args.m)
    except witness.NotInSet:
        verdict = classify.member(classify.GroupRule("S4"), args.m)
        out = {"schema": "gdet-witness/1", "target": args.m, "member": False,
               "reason": verdict.reason}
        _emit(out)
        return EXIT_NO
    out = {"schema": "gdet-witness/1", "member": True}
    out.update(cert.as_dict())
    out["verified"] = witness.verify_certificate(cert)
    _emit(out)
    return EXIT_OK if out["verified"] else EXIT_ERROR


def _cmd_verify_identities(args) -> int:
    factors = sympoly.build_symbolic()
    if args.id:
        try:
            ids = [sympoly.IdentityId[args.id]]
        except KeyError:
            raise ValueError(f"unknown identity: {args.id!r} "
                             f"(choose from {[i.name for i in sympoly.IdentityId]})")
    else:
        ids = list(sympoly.IdentityId)
    reports = [sympoly.check_identity(i, factors) for i in ids]
    if args.json:
        _emit({
            "schema": "gdet-identities/1",
            "all_hold": all(r.holds for r in reports),
            "reports": [
                {"id": r.identity.name, "holds": r.holds,
                 "residual_terms": r.residual_term_count,
                 "elapsed_s": round(r.elapsed, 4)}
                for r in reports
            ],
        })
    else:
        for r in reports:
            status = "PASS" if r.holds else "FAIL"
            print(f"{status} {r.identity.name:14s} residual={r.residual_term_count} "
                  f"{r.elapsed:.2f}s")
    return EXIT_OK if all(r.holds for r in reports) else EXIT_NO


def _cmd_scan(args) -> int:
    lo, hi = _parse_range(args.range)
    if args.random is not None:
        cfg = harness.ScanConfig(group=args.group, lo=lo, hi=hi, mode="random",
                                 count=args.random, seed=args.seed,
                                 out=args.out, full=args.full)
    else:
        cfg = harness.ScanConfig(group=args.group, lo=lo, hi=hi, mode="exhaustive",
                                 out=args.out, full=args.full)
    report = harness.scan(cfg)
    if args.json:
        print(report.to_json())
    else:
        print(f"evaluated {report.total} vectors, {report.zeros} zeros, "
              f"{len(report.value_counts)} distinct values, "
              f"{len(report.violations)} violations")
        for violation in report.violations[:10]:
            print(f"VIOLATION det={violation['value']} coeffs={violation['coeffs']}")
    return EXIT_NO if report.violations else EXIT_OK


def _cmd_parse(args) -> int:
    group = build_group("S4")
    elem = parse_expr(args.expr, group)
    if args.json:
        _emit({"schema": "gdet-parse/1", "group": "S4", "coeffs": list(elem.coeffs)})
    else:
        print(json.dumps(list(elem.coeffs)))
    return EXIT_OK


def _parse_range(text):
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise ValueError(f"bad range {text!r}, expected LO:HI") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gdet",
        description="Integer group determinants for small finite groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("det", help="evaluate a group determinant")
    p.add_argument("--group", default="S4")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--coeffs", help="inline JSON or a path to a JSON file")
    src.add_argument("--expr", help="ring expression in x and y (S4 only)")
    p.add_argument("--factors", action="store_true", help="also print the factor profile")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_det)

    p = sub.add_parser("member", help="decide membership in an attainable set")
    p.add_argument("--group", required=True, help="rule name, e.g. S4, A4, D8, Zp:7")
    p.add_argument("m", type=int)
    p.set_defaults(func=_cmd_member, json=True)

    p = sub.add_parser("lambda", help="smallest non-trivial |determinant|")
    p.add_argument("--group", required=True)
    p.add_argument("--scan-range", help="LO:HI for an exhaustive scan instead of the rule")
    p.add_argument("--support", help="comma-separated slots for the scan")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_lambda)

    p = sub.add_parser("witness", help="synthesize an S4 witness certificate")
    p.add_argument("m", type=int)
    p.set_defaults(func=_cmd_witness, json=True)

    p = sub.add_parser("verify-identities", help="check the factor congruence identities")
    p.add_argument("--id", help="check a single identity by name")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify_identities)

    p = sub.add_parser("scan", help="scan determinants against the decider")
    p.add_argument("--group", required=True)
    p.add_argument("--range", required=True, help="entry range LO:HI")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--random", type=int, metavar="COUNT")
    mode.add_argument("--exhaustive", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="persist report as JSONL + CSV at this path")
    p.add_argument("--full", action="store_true", help="persist one record per vector")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("parse", help="parse a ring expression to canonical coefficients")
    p.add_argument("--expr", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_parse)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ParseError, OSError, json.JSONDecodeError) as exc:
        print(f"gdet: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())

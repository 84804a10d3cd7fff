"""Command-line front end.

Subcommands:
    check-q     one rational-base check for a prime r
    scan-q      range scan over primes, optional comparison with a list file
    check-quad  one quadratic-base check (corollary form, or the literal
                four-hypothesis form with --theorem; --theorem also accepts
                --d 0 for the rational base)
    frey        build the curve for (x, y), print exact invariants,
                coprimality report and conductor support

Exit codes (scripts can branch on the tri-state):
    0  pass          1  fail          2  undetermined
    64 usage error   70 internal/computation error

JSON reports (--json) are deterministic: stable key order, no timestamps,
byte-identical for identical inputs and tool version.  Wall-clock timing is
printed only in the human-readable form.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from importlib import resources

from . import __version__, classnumber, criteria, frey
from .cycfield import build_field
from .errors import (
    ConsistencyError,
    DegenerateCurveError,
    NotCoprimeError,
    TableError,
    UnfactoredCofactorError,
)
from .numutil import is_prime, is_squarefree

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_UNDETERMINED = 2
EXIT_USAGE = 64
EXIT_INTERNAL = 70

_VERDICT_EXIT = {
    criteria.PASS: EXIT_PASS,
    criteria.FAIL: EXIT_FAIL,
    criteria.UNDETERMINED: EXIT_UNDETERMINED,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="rrpfermat", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=f"rrpfermat {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-q", help="rational-base check for one prime r")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_q)

    p = sub.add_parser("scan-q", help="scan primes 5..max-r for full passes")
    p.add_argument("--max-r", type=int, required=True, dest="max_r")
    p.add_argument("--expect", type=str, default=None,
                   help="file with the expected list; exit 0 only on exact match")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_scan_q)

    p = sub.add_parser("check-quad", help="quadratic-base check for (d, r)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--hplus-table", type=str, default=None, dest="hplus_table")
    p.add_argument("--theorem", action="store_true",
                   help="check the literal four hypotheses instead of the corollary form")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_quad)

    p = sub.add_parser("frey", help="curve data for integer x, y")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--k", type=str, default="0,1,2",
                   help="comma-separated distinct indices k1,k2,k3 (default 0,1,2)")
    p.add_argument("--smoothness-bound", type=int, default=100_000, dest="smoothness_bound")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_frey)

    return parser


def _require_prime_r(r: int):
    if not is_prime(r) or r < 5:
        raise UsageError(f"--r {r}: must be a prime >= 5")
    if r > 200:
        raise UsageError(f"--r {r}: desk-scale guard is r <= 200")


def _emit_verdict(verdict, args, extra: dict | None = None, elapsed: float = 0.0) -> int:
    if args.json:
        payload = {
            "tool": "rrpfermat",
            "version": __version__,
            "command": args.command,
            "input": _input_echo(args),
            "verdict": verdict.to_dict(),
        }
        if extra:
            payload.update(extra)
        print(json.dumps(payload, indent=2))
    else:
        print(f"target: {verdict.target}  base_d={verdict.base_d}  r={verdict.r}")
        for cond in verdict.conditions:
            ev = json.dumps(cond.evidence, sort_keys=True)
            print(f"  [{cond.status.upper():12s}] {cond.name:32s} {ev}")
        for key, value in verdict.diagnostics.items():
            print(f"  (diagnostic) {key} = {value}")
        if extra:
            for key, value in extra.items():
                print(f"  {key}: {value}")
        print(f"overall: {verdict.overall.upper()}")
        print(f"elapsed: {elapsed * 1000.0:.1f} ms")
    return _VERDICT_EXIT[verdict.overall]


def _input_echo(args) -> dict:
    skip = {"func", "command", "json"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def cmd_check_q(args) -> int:
    _require_prime_r(args.r)
    t0 = time.monotonic()
    verdict = criteria.check_corollary_Q(args.r)
    return _emit_verdict(verdict, args, elapsed=time.monotonic() - t0)


def cmd_scan_q(args) -> int:
    if args.max_r > 200:
        raise UsageError(f"--max-r {args.max_r}: desk-scale guard is 200")
    if args.max_r < 0:
        raise UsageError("--max-r must be nonnegative")
    t0 = time.monotonic()
    passing = criteria.scan_Q(args.max_r)
    elapsed = time.monotonic() - t0
    expected = None
    if args.expect is not None:
        try:
            text = open(args.expect, encoding="utf-8").read()
        except OSError as exc:
            raise UsageError(f"--expect {args.expect}: {exc}")
        expected = _parse_int_list(text)
    if args.json:
        payload = {
            "tool": "rrpfermat",
            "version": __version__,
            "command": "scan-q",
            "input": _input_echo(args),
            "passing_r": passing,
        }
        if expected is not None:
            payload["expected_r"] = expected
            payload["match"] = passing == expected
        print(json.dumps(payload, indent=2))
    else:
        print(" ".join(str(r) for r in passing))
        if expected is not None:
            print(f"expected match: {passing == expected}")
        print(f"elapsed: {elapsed * 1000.0:.1f} ms", file=sys.stderr)
    if expected is not None:
        return EXIT_PASS if passing == expected else EXIT_FAIL
    return EXIT_PASS


def _parse_int_list(text: str) -> list[int]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0]
        out.extend(int(tok) for tok in line.split())
    return out


def shipped_q_list_path() -> str:
    return str(resources.files("rrpfermat").joinpath("data/q_list.txt"))


def cmd_check_quad(args) -> int:
    _require_prime_r(args.r)
    if args.d == 0 and not args.theorem:
        raise UsageError("--d 0 (rational base) is only meaningful with --theorem")
    if args.d != 0 and (args.d <= 1 or not is_squarefree(args.d)):
        raise UsageError(f"--d {args.d}: must be a squarefree integer > 1 (or 0 with --theorem)")
    table = None
    if args.hplus_table is not None:
        try:
            table = classnumber.load_hplus_table(args.hplus_table)
        except (OSError, TableError) as exc:
            raise UsageError(f"--hplus-table: {exc}")
    t0 = time.monotonic()
    if args.theorem:
        verdict = criteria.check_four_hypotheses(args.d, args.r, table)
    else:
        verdict = criteria.check_corollary_quad(args.d, args.r, table)
    digest = classnumber.table_digest(args.hplus_table)
    extra = {"hplus_table_sha256": digest}
    code = _emit_verdict(verdict, args, extra=extra, elapsed=time.monotonic() - t0)
    if code == EXIT_UNDETERMINED and not args.json:
        for cond in verdict.conditions:
            missing = cond.evidence.get("missing_entry")
            if missing:
                print(f"missing h+ table entry: {missing}")
    return code


def cmd_frey(args) -> int:
    _require_prime_r(args.r)
    if math.gcd(args.x, args.y) != 1:
        raise UsageError(f"--x {args.x} --y {args.y}: gcd must be 1")
    try:
        k1, k2, k3 = (int(tok) for tok in args.k.split(","))
    except ValueError:
        raise UsageError(f"--k {args.k}: expected three comma-separated integers")
    field = build_field(args.r)
    t0 = time.monotonic()
    try:
        curve = frey.frey_curve(field, args.x, args.y, k1, k2, k3)
    except ValueError as exc:
        raise UsageError(str(exc))
    inv = frey.invariants(curve)
    cop = frey.coprimality_check(field, args.x, args.y)
    support = frey.conductor_support_outside_S(curve, args.smoothness_bound)
    elapsed = time.monotonic() - t0
    report = {
        "tool": "rrpfermat",
        "version": __version__,
        "command": "frey",
        "input": _input_echo(args),
        "A": list(curve.A.coeffs),
        "B": list(curve.B.coeffs),
        "C": list(curve.C.coeffs),
        "A_plus_B_plus_C": list((curve.A + curve.B + curve.C).coeffs),
        "delta": list(inv.delta.coeffs),
        "c4": list(inv.c4.coeffs),
        "j_num": list(inv.j_num.coeffs),
        "j_den": list(inv.j_den.coeffs),
        "coprimality_ok": cop.ok,
        "coprimality_pairs": [list(p) for p in cop.pairs],
        "conductor_support_outside_S": list(support),
    }
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        for key in ("A", "B", "C", "A_plus_B_plus_C", "delta", "c4", "j_num", "j_den"):
            print(f"{key}: {report[key]}")
        print(f"coprimality ok: {cop.ok}")
        print(f"conductor support outside {{2, {args.r}}}: {list(support)}")
        print(f"elapsed: {elapsed * 1000.0:.1f} ms")
    return EXIT_PASS


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DegenerateCurveError, UnfactoredCofactorError, NotCoprimeError,
            ConsistencyError, TableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

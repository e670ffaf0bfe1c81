"""Command-line front end: ``k3enum <subcommand> [options]``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import bps, checks, k3counts, nl_stu
from .errors import K3EnumError
from .report import exact_str


def _emit_rows(header: List[str], rows: List[List], fmt: str, out) -> None:
    if fmt == "json":
        data = [{h: (None if v is None else (v if isinstance(v, str) else exact_str(v))) for h, v in zip(header, row)} for row in rows]
        out.write(json.dumps(data, indent=2, ensure_ascii=False) + "\n")
        return
    out.write("\t".join(header) + "\n")
    for row in rows:
        out.write("\t".join("" if v is None else (v if isinstance(v, str) else exact_str(v)) for v in row) + "\n")


def cmd_table1(args, out) -> int:
    table = k3counts.table1(args.pmax)
    if args.format == "tsv":
        out.write(table.to_tsv(args.pmax))
    else:
        rows = [[p, delta, p - delta, table.by_delta(p, delta)] for p in range(1, args.pmax + 1) for delta in range(1, 10) if table.by_delta(p, delta) is not None]
        _emit_rows(["p", "delta", "g", "N"], rows, "json", out)
    return 0


def cmd_table2(args, out) -> int:
    table = bps.kkv_table(args.pmax)
    if args.format == "tsv":
        out.write(table.to_tsv(args.pmax))
    else:
        rows = [[g, p, table.get(g, p)] for g in range(args.pmax + 1) for p in range(g, args.pmax + 1)]
        _emit_rows(["g", "p", "r"], rows, "json", out)
    return 0


def cmd_yz(args, out) -> int:
    t = args.trunc or 11
    s = k3counts.yau_zaslow_series(t)
    _emit_rows(["p", "N_0^p"], [[p, s[p]] for p in range(t)], args.format, out)
    return 0


def cmd_gbl(args, out) -> int:
    t = args.trunc or 11
    s = k3counts.gbl_series(args.g, t)
    _emit_rows(["p", f"N_{args.g}^p"], [[p, s[p]] for p in range(t)], args.format, out)
    return 0


def cmd_kkv(args, out) -> int:
    table = bps.kkv_table(args.pmax)
    rows = [[g, p, table.get(g, p)] for p in range(args.pmax + 1) for g in range(p + 1)]
    _emit_rows(["g", "p", "r"], rows, args.format, out)
    return 0


def cmd_nl(args, out) -> int:
    q = nl_stu.NLQuery(args.p, args.d1, args.d2)
    delta = nl_stu.discriminant_delta(q)
    value = nl_stu.nl_number(q, include_delta_zero=not args.exclude_delta_zero)
    _emit_rows(["p", "d1", "d2", "Delta", "NL"], [[args.p, args.d1, args.d2, delta, value]], args.format, out)
    return 0


def cmd_kml(args, out) -> int:
    d2_min = 1 if args.d2min is None else args.d2min
    values = nl_stu.kml_series(args.d1max, args.d2max, args.domain, d2_min=d2_min)
    rows = [[d1, d2, v] for (d1, d2), v in sorted(values.items())]
    _emit_rows(["d1", "d2", "N"], rows, args.format, out)
    return 0


def cmd_check(args, out) -> int:
    names = list(checks.SUITES) if args.suite == "all" else [args.suite]
    reports = [checks.run(n, trunc=args.trunc, depth=args.depth) for n in names]
    if args.format == "tsv":
        for r in reports:
            out.write(f"{r.name}\t{r.status}\n")
    else:
        payload = [r.to_dict() for r in reports]
        out.write(json.dumps(payload if len(payload) > 1 else payload[0], indent=2, ensure_ascii=False) + "\n")
    return 0 if all(r.passed for r in reports) else 1


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _table1_pmax(text: str) -> int:
    v = int(text)
    if not 1 <= v <= k3counts.TABLE1_MAX_P:
        raise argparse.ArgumentTypeError(f"pmax must lie in 1..{k3counts.TABLE1_MAX_P}")
    return v


def _non_negative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


_COMMON_DEFAULTS = {"trunc": None, "format": "tsv", "depth": 64}


def build_parser() -> argparse.ArgumentParser:
    # shared flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--trunc", type=_positive, default=argparse.SUPPRESS, help="truncation order")
    common.add_argument("--format", choices=("tsv", "json"), default=argparse.SUPPRESS, help="output format (default tsv)")
    common.add_argument("--depth", type=_positive, default=argparse.SUPPRESS, help="Cremona search depth (default 64)")

    parser = argparse.ArgumentParser(prog="k3enum", description="Exact curve counts on K3 surfaces.", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table1", parents=[common], help="genus g counts N_g^p by (p, p - g)")
    p.add_argument("--pmax", type=_table1_pmax, default=k3counts.TABLE1_MAX_P)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("table2", parents=[common], help="KKV numbers r_g^p")
    p.add_argument("--pmax", type=_non_negative, default=4)
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("yz", parents=[common], help="Yau-Zaslow coefficients")
    p.set_defaults(func=cmd_yz)

    p = sub.add_parser("gbl", parents=[common], help="genus g generating series")
    p.add_argument("--g", type=_non_negative, required=True)
    p.set_defaults(func=cmd_gbl)

    p = sub.add_parser("kkv", parents=[common], help="KKV numbers in long form")
    p.add_argument("--pmax", type=_non_negative, default=6)
    p.set_defaults(func=cmd_kkv)

    p = sub.add_parser("nl", parents=[common], help="STU Noether-Lefschetz number")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    p.add_argument("--exclude-delta-zero", action="store_true", help="report 0 instead of -4 when Delta = 0")
    p.set_defaults(func=cmd_nl)

    p = sub.add_parser("kml", parents=[common], help="genus 0 STU fibre-class invariants")
    p.add_argument("--d1max", type=_non_negative, required=True)
    p.add_argument("--d2max", type=int, required=True)
    p.add_argument("--d2min", type=int, default=None, help="lowest d2 (negative values need --domain q1<q2)")
    p.add_argument("--domain", choices=nl_stu.DOMAINS, default="q2<q1")
    p.set_defaults(func=cmd_kml)

    p = sub.add_parser("check", parents=[common], help="run a named consistency check")
    p.add_argument("suite", choices=[*checks.SUITES, "all"])
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    # defaults are filled in here: the shared flag actions are the same objects
    # in every subparser, so set_defaults would let a subcommand reset them
    for name, value in _COMMON_DEFAULTS.items():
        if not hasattr(args, name):
            setattr(args, name, value)
    try:
        return args.func(args, out)
    except K3EnumError as exc:
        print(f"k3enum: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

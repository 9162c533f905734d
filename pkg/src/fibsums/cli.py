"""Command-line front end.

Exit status: 0 when every check passes, 1 when a verification fails, 2 on
usage errors (argparse's own convention).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from . import conjlab, oeis, sweeps
from .binsum import SumSpec, a_row
from .fibpoly import FAMILIES, family
from .reports import jsonable

log = logging.getLogger("fibsums")


def _range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        n = int(text)
        return range(n, n + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _point(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("--at expects X,S")
    return tuple(_rational(p) for p in parts)


def _emit_json(obj, out, timestamp: bool):
    if timestamp:
        obj = dict(obj, generated_at=datetime.now(timezone.utc).isoformat())
    out.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _emit_csv(header, rows, out):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)


# --- subcommands -------------------------------------------------------------

def cmd_poly(args, out) -> int:
    values = []
    for n in args.n:
        p = family(args.family, n, args.k)
        if args.at is not None:
            x, s = args.at
            values.append((n, p.evaluate({"x": x, "s": s})))
        else:
            values.append((n, p))
    if args.format == "json":
        _emit_json({"family": args.family, "k": str(args.k),
                    "at": None if args.at is None else [str(v) for v in args.at],
                    "terms": [{"n": str(n), "value": str(v)} for n, v in values]},
                   out, not args.no_timestamp)
    elif args.format == "csv":
        _emit_csv(["n", "value"], [(n, str(v)) for n, v in values], out)
    elif args.at is not None:
        out.write(",".join(str(v) for _, v in values) + "\n")
    else:
        for _, v in values:
            out.write(f"{v}\n")
    return 0


def cmd_binsum(args, out) -> int:
    spec = SumSpec.of(args.k, args.m, args.l, args.z)
    row = a_row(spec, args.n)
    if args.format == "json":
        _emit_json({"k": str(args.k), "m": str(args.m), "l": str(args.l), "z": str(spec.z),
                    "terms": [str(v) for v in row]}, out, not args.no_timestamp)
    elif args.format == "csv":
        _emit_csv(["n", "value"], [(n, str(v)) for n, v in enumerate(row)], out)
    else:
        out.write(",".join(str(v) for v in row) + "\n")
    return 0


def cmd_verify(args, out) -> int:
    names = sweeps.SUITES if args.suite == "all" else (args.suite,)
    reports = [sweeps.run_suite(s, args.m_max, args.k_max, args.n_max, args.jobs)
               for s in names]
    ok = all(r["summary"]["pass"] for r in reports)
    if args.format == "json":
        obj = reports[0] if len(reports) == 1 else {
            "suite": "all", "parameters": {}, "cells": [],
            "suites": reports, "summary": {"pass": ok}}
        _emit_json(obj, out, not args.no_timestamp)
    elif args.format == "csv":
        rows = [(r["suite"], c["id"], c["pass"], c["n0"]) for r in reports for c in r["cells"]]
        _emit_csv(["suite", "id", "pass", "n0"], rows, out)
    else:
        for r in reports:
            s = r["summary"]
            out.write(f"{r['suite']}: {'PASS' if s['pass'] else 'FAIL'} "
                      f"({s['passed']}/{s['cells']} cells)\n")
            for c in r["cells"]:
                if not c["pass"]:
                    out.write(f"  FAIL {c['id']}: {c.get('counterexample')}\n")
    return 0 if ok else 1


def cmd_conjecture(args, out) -> int:
    reports = conjlab.check_conjectures(args.m_max)
    if args.format == "json":
        _emit_json({"suite": "conjecture", "parameters": {"m_max": str(args.m_max)},
                    "formulas": [r.to_dict() for r in reports]}, out, not args.no_timestamp)
    elif args.format == "csv":
        rows = [(r.formula, e.m, "" if e.predicted is None else str(e.predicted), e.actual,
                 e.match, e.pole) for r in reports for e in r.entries]
        _emit_csv(["formula", "m", "predicted", "actual", "match", "pole"], rows, out)
    else:
        for r in reports:
            start = r.matching_from()
            where = "no trailing match" if start is None else f"matches for m >= {start}"
            poles = [e.m for e in r.entries if e.pole]
            extra = f", poles at {poles}" if poles else ""
            gap = "" if r.contiguous() else "  [NOT CONTIGUOUS]"
            out.write(f"{r.formula}: {where}{extra}{gap}\n")
    return 0


def cmd_oeis_check(args, out) -> int:
    cache = Path(args.cache_dir) if args.cache_dir else None
    results, warnings = oeis.oeis_check(offline=args.offline, cache_dir=cache,
                                        refresh=args.refresh, n_terms=args.terms)
    for w in warnings:
        log.warning(w)
    ok = all(r["pass"] for r in results)
    if args.format == "json":
        _emit_json({"suite": "oeis", "parameters": {"offline": args.offline},
                    "cells": jsonable(results), "warnings": warnings,
                    "summary": {"pass": ok}}, out, not args.no_timestamp)
    elif args.format == "csv":
        _emit_csv(["id", "source", "pass", "offset"],
                  [(r["id"], r["source"], r["pass"], r.get("offset", "")) for r in results], out)
    else:
        for r in results:
            off = f" offset={r['offset']}" if "offset" in r else ""
            out.write(f"{r['id']} {r['description']}: {'match' if r['pass'] else 'MISMATCH'}"
                      f" [{r['source']}{off}]\n")
    return 0 if ok else 1


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibsums",
        description="Exact Fibonacci/Lucas polynomial and binomial-sum recurrences.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_format):
        p.add_argument("--format", choices=("json", "csv", "text"), default=default_format)
        p.add_argument("--no-timestamp", action="store_true",
                       help="omit generated_at from JSON output")

    p = sub.add_parser("poly", help="print polynomial family members")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--n", type=_range, required=True, help="N or A..B")
    p.add_argument("--at", type=_point, help="evaluate at X,S")
    common(p, "text")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("binsum", help="print A_0..A_n of the binomial sum")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--z", type=_rational, required=True)
    p.add_argument("--n", type=int, required=True, help="last index")
    common(p, "text")
    p.set_defaults(func=cmd_binsum)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("suite", choices=sweeps.SUITES + ("all",))
    p.add_argument("--m-max", type=int)
    p.add_argument("--k-max", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--jobs", type=int, default=1)
    common(p, "json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", help="compare the conjectured a(.,4,.) formulas")
    p.add_argument("--m-max", type=int, default=12)
    common(p, "json")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("oeis-check", help="compare computed prefixes with OEIS")
    p.add_argument("--offline", action="store_true", help="embedded fixtures only")
    p.add_argument("--cache-dir", help=f"b-file cache (default ${oeis.CACHE_ENV} or ~/.cache)")
    p.add_argument("--refresh", action="store_true", help="re-fetch cached b-files")
    p.add_argument("--terms", type=int, default=50)
    common(p, "json")
    p.set_defaults(func=cmd_oeis_check)
    return parser


def main(argv: Optional[List[str]] = None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    out = out or sys.stdout
    for attr in ("m_max", "n", "k"):
        v = getattr(args, attr, None)
        if isinstance(v, int) and v < (0 if attr == "n" else 1):
            parser.error(f"--{attr.replace('_', '-')} out of range")
    try:
        return args.func(args, out)
    except ValueError as exc:
        parser.error(str(exc))


if __name__ == "__main__":
    sys.exit(main())

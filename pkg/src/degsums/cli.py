"""Command-line front end.

Subcommands: sum, poly, census, verify, bounds, scan, verify-all.
Formats: table (human), json, and csv (bounds).  All counts are serialized
as decimal strings in json/csv since they exceed 64 bits quickly.  Output is
deterministic: identical flags produce byte-identical json/csv, independent
of --jobs.

Exit status: 0 = success / all pass, 1 = a verification claim, bound flag, or
scan came back false, 2 = usage or domain error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import acceptance
from .bounds import (BOUNDS_CSV_HEADER, SCAN_LEMMAS, bounds_table,
                     scan_inequalities)
from .census import CensusQuery, run_census, verify_counts
from .errors import DomainError
from .groups import GroupSpec, parse_family
from .qpoly import render_qpoly
from .sums import degree_sum, degree_sum_poly, parse_sum_kind


def _parse_int_list(text: str) -> list:
    """Parse "1..3" / "3,5,9" / "1..4,7" into a sorted duplicate-free list."""
    out = []
    for token in text.split(","):
        token = token.strip()
        if ".." in token:
            lo, _, hi = token.partition("..")
            try:
                lo, hi = int(lo), int(hi)
            except ValueError:
                raise DomainError(f"bad range {token!r}, expected LO..HI")
            if lo > hi:
                raise DomainError(f"empty range {token!r}")
            out.extend(range(lo, hi + 1))
        else:
            try:
                out.append(int(token))
            except ValueError:
                raise DomainError(f"bad integer {token!r}")
    return sorted(set(out))


def _parse_twists(text: str) -> tuple:
    out = []
    for token in text.split(","):
        token = token.strip().lstrip("+")
        if token not in ("1", "-1"):
            raise DomainError(f"twist constant must be +1 or -1, got {token!r}")
        out.append(int(token))
    return tuple(dict.fromkeys(out))


def _kv_table(pairs) -> str:
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in pairs)


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_sum(args) -> int:
    spec = GroupSpec(parse_family(args.family), args.n, args.q)
    result = degree_sum(spec, parse_sum_kind(args.kind))
    if args.format == "json":
        _emit_json(result.to_json_dict())
    else:
        pairs = [
            ("family", str(spec.family)), ("n", spec.n), ("q", spec.q),
            ("kind", result.kind.value), ("value", result.value),
            ("poly", render_qpoly(result.poly) if result.poly is not None else "(none)"),
            ("source", result.source_citation),
        ]
        print(_kv_table(pairs))
    return 0


def cmd_poly(args) -> int:
    family = parse_family(args.family)
    kind = parse_sum_kind(args.kind)
    poly = degree_sum_poly(family, args.n, kind)
    if args.format == "json":
        _emit_json({
            "family": str(family), "n": args.n, "kind": kind.value,
            "degree": poly.degree, "poly": render_qpoly(poly),
        })
    else:
        pairs = [
            ("family", str(family)), ("n", args.n), ("kind", kind.value),
            ("degree", poly.degree), ("poly", render_qpoly(poly)),
        ]
        print(_kv_table(pairs))
    return 0


def cmd_census(args) -> int:
    spec = GroupSpec(parse_family(args.family), args.n, args.p)
    query = CensusQuery(spec, twist_constants=_parse_twists(args.twists))
    report = run_census(query, jobs=args.jobs)
    if args.format == "json":
        _emit_json(report.to_json_dict())
    else:
        print(f"family {spec.family}  n {spec.n}  p {spec.q}  dim {spec.matrix_dim}")
        print(f"order        {report.order}")
        print(f"involutions  {report.involution_total}")
        for b in report.buckets:
            print(f"  mu={b.mu:+d} j={b.j}  {b.count}")
        for c in sorted(report.twisted, reverse=True):
            print(f"twisted({c:+d})  {report.twisted[c]}")
    return 0


def cmd_verify(args) -> int:
    spec = GroupSpec(parse_family(args.family), args.n, args.p)
    record = verify_counts(spec, jobs=args.jobs)
    if args.format == "json":
        _emit_json(record.to_json_dict())
    else:
        print(f"family {spec.family}  n {spec.n}  p {spec.q}  dim {spec.matrix_dim}")
        for claim in record.claims:
            status = "ok " if claim.ok else "FAIL"
            line = f"[{status}] {claim.name}: expected {claim.expected}, census {claim.actual}"
            if claim.note:
                line += f"  ({claim.note})"
            print(line)
        print("result: " + ("pass" if record.ok else "fail"))
    return 0 if record.ok else 1


def cmd_bounds(args) -> int:
    families = [parse_family(tag) for tag in args.family.split(",")]
    rows = bounds_table(families, _parse_int_list(args.n), _parse_int_list(args.q))
    if args.format == "json":
        _emit_json({"rows": [row.to_json_dict() for row in rows]})
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(BOUNDS_CSV_HEADER)
        for row in rows:
            writer.writerow(row.to_csv_row())
        sys.stdout.write(buf.getvalue())
    else:
        cells = [BOUNDS_CSV_HEADER] + [row.to_csv_row() for row in rows]
        widths = [max(len(line[i]) for line in cells) for i in range(len(BOUNDS_CSV_HEADER))]
        for line in cells:
            print("  ".join(v.ljust(w) for v, w in zip(line, widths)).rstrip())
    return 0 if all(row.ok for row in rows) else 1


def cmd_scan(args) -> int:
    result = scan_inequalities(args.lemma, args.m_max, args.q_max, jobs=args.jobs)
    if args.format == "json":
        _emit_json(result.to_json_dict())
    else:
        print(f"lemma {result.lemma}  m<={result.m_max}  q<={result.q_max}")
        print(f"cells       {result.cells}")
        print(f"violations  {len(result.violations)}")
        for v in result.violations:
            print(f"  {v}")
    return 0 if result.ok else 1


def cmd_verify_all(args) -> int:
    progress = None
    if args.format == "table":
        progress = lambda msg: print(msg, file=sys.stderr, flush=True)
    results = acceptance.run_all(jobs=args.jobs, progress=progress)
    if args.format == "json":
        _emit_json({
            "criteria": [
                {
                    "number": r.number, "title": r.title,
                    "ok": r.ok, "checks": r.checks,
                    "failures": list(r.failures),
                }
                for r in results
            ],
            "ok": all(r.ok for r in results),
        })
    else:
        for r in results:
            print(r.line() + f"  ({r.elapsed_s:.1f}s)")
            for failure in r.failures:
                print(f"    {failure}")
        passed = sum(r.ok for r in results)
        print(f"acceptance: {'PASS' if passed == len(results) else 'FAIL'} ({passed}/{len(results)} criteria)")
    return 0 if all(r.ok for r in results) else 1


def _add_format(parser, choices=("table", "json")) -> None:
    parser.add_argument("--format", choices=choices, default="table")


def _add_jobs(parser) -> None:
    parser.add_argument("--jobs", type=int, default=None,
                        help="worker processes (default: all cores); output is independent of this")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degsums",
        description="Character-degree sums of finite classical groups: "
                    "closed forms, brute-force census, bounds, inequality scans.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sum", help="evaluate a degree-sum formula at a prime power q")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--kind", required=True,
                   help="all | real_valued | fs_signed | fs_plus | fs_minus")
    _add_format(p)
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("poly", help="print a degree-sum formula as a polynomial in q")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", required=True)
    _add_format(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("census", help="enumerate a small group and count involutions")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True, help="odd prime field size")
    p.add_argument("--twists", default="1,-1",
                   help="comma list of twist constants c for |{g : g^2 = c mu(g) I}|")
    _add_jobs(p)
    _add_format(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="census a group and check it against every formula")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    _add_jobs(p)
    _add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="bounds table for connected-center families")
    p.add_argument("--family", required=True, help="comma list, e.g. gl,u,gsp,so_odd")
    p.add_argument("--n", required=True, help="range or list, e.g. 1..8 or 1,2,5")
    p.add_argument("--q", required=True, help="range or list, e.g. 3,5,9 or 3..49")
    _add_format(p, choices=("table", "json", "csv"))
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("scan", help="exhaustively scan an inequality lemma")
    p.add_argument("--lemma", required=True, choices=SCAN_LEMMAS)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--q-max", type=int, required=True)
    _add_jobs(p)
    _add_format(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify-all", help="run the full acceptance matrix (takes minutes)")
    _add_jobs(p)
    _add_format(p)
    p.set_defaults(func=cmd_verify_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

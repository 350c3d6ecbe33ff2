"""Command-line interface.

Subcommands: count, table, enumerate, figure, verify.  Output formats are
plain (default), json, and csv.  Exit codes: 0 success, 2 usage or domain
error, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import counting, goursat, oracle
from .counting import TypeKey

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISMATCH = 3


class CliError(Exception):
    """Invalid arguments or domain violation; maps to exit code 2."""


def _positive(value: str, name: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise CliError(f"{name} must be an integer, got {value!r}")
    if n < 1:
        raise CliError(f"{name} must be >= 1, got {n}")
    return n


def _parse_type(spec: str) -> TypeKey:
    parts = spec.split(",")
    if len(parts) != 2:
        raise CliError(f"--type expects A,B, got {spec!r}")
    a = _positive(parts[0], "A")
    b = _positive(parts[1], "B")
    if b % a != 0:
        raise CliError(f"A = {a} does not divide B = {b}")
    return TypeKey(a, b)


def _type_name(key: TypeKey) -> str:
    if key.A == 1:
        return f"Z_{key.B}"
    return f"Z_{key.A} x Z_{key.B}"


def _csv_dump(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# --- count ---------------------------------------------------------------

def cmd_count(args) -> int:
    m = _positive(args.m, "m")
    n = _positive(args.n, "n")
    filters = [args.order is not None, args.type is not None, args.cyclic]
    if sum(filters) > 1:
        raise CliError("at most one of --order, --type, --cyclic may be given")
    if args.order is not None:
        delta = _positive(args.order, "order")
        value = counting.count_by_order(m, n, delta)
        label = {"order": delta}
    elif args.type is not None:
        key = _parse_type(args.type)
        value = counting.count_by_type(m, n, key)
        label = {"type": [key.A, key.B]}
    elif args.cyclic:
        value = counting.count_cyclic(m, n)
        label = {"cyclic": True}
    else:
        value = counting.count_total(m, n)
        label = {}

    if args.format == "json":
        print(json.dumps({"ambient": [m, n], "filter": label or None, "count": value}))
    elif args.format == "csv":
        print(_csv_dump(["count"], [[value]]), end="")
    else:
        print(value)
    return EXIT_OK


# --- table ---------------------------------------------------------------

def table_json_obj(table: counting.SubgroupTable) -> dict:
    return {
        "ambient": list(table.ambient),
        "total": table.total,
        "by_order": [
            {"order": o, "count": c} for o, c in sorted(table.by_order.items())
        ],
        "by_type": [
            {"a": k.A, "b": k.B, "count": c} for k, c in sorted(table.by_type.items())
        ],
        "cyclic": table.cyclic_total,
        "noncyclic": table.noncyclic_total,
    }


def render_table_plain(table: counting.SubgroupTable) -> str:
    m, n = table.ambient
    lines = [f"Subgroups of Z_{m} x Z_{n}"]
    lines.append(f"total: {table.total}")
    lines.append(f"cyclic: {table.cyclic_total}")
    lines.append(f"noncyclic: {table.noncyclic_total}")
    lines.append("by order:")
    for order, cnt in sorted(table.by_order.items()):
        lines.append(f"  {order}: {cnt}")
    lines.append("by type:")
    for key, cnt in sorted(table.by_type.items()):
        lines.append(f"  {_type_name(key)}: {cnt}")
    return "\n".join(lines)


def render_table_csv(table: counting.SubgroupTable) -> str:
    rows = [["total", "", table.total],
            ["cyclic", "", table.cyclic_total],
            ["noncyclic", "", table.noncyclic_total]]
    for order, cnt in sorted(table.by_order.items()):
        rows.append(["order", str(order), cnt])
    for key, cnt in sorted(table.by_type.items()):
        rows.append(["type", f"{key.A}x{key.B}", cnt])
    return _csv_dump(["row", "key", "count"], rows)


def cmd_table(args) -> int:
    m = _positive(args.m, "m")
    n = _positive(args.n, "n")
    table = counting.build_table(m, n)
    if args.format == "json":
        print(json.dumps(table_json_obj(table)))
    elif args.format == "csv":
        print(render_table_csv(table), end="")
    else:
        print(render_table_plain(table))
    return EXIT_OK


# --- enumerate -----------------------------------------------------------

def cmd_enumerate(args) -> int:
    m = _positive(args.m, "m")
    n = _positive(args.n, "n")
    descriptors = []
    for i, t in enumerate(goursat.enumerate_tuples(m, n)):
        if args.limit is not None and i >= args.limit:
            break
        descriptors.append(goursat.describe(m, n, t))

    if args.format == "json":
        records = []
        for d in descriptors:
            t = d.tuple
            records.append({
                "tuple": [t.a, t.b, t.c, t.d, t.ell],
                "order": d.order,
                "exponent": d.exponent,
                "invariants": [d.invariants.u, d.invariants.v],
                "cyclic": d.cyclic,
                "generators": [list(g) for g in d.generators],
            })
        print(json.dumps({"ambient": [m, n], "subgroups": records}))
    elif args.format == "csv":
        rows = []
        for d in descriptors:
            t = d.tuple
            (g1x, g1y), (g2x, g2y) = d.generators
            rows.append([t.a, t.b, t.c, t.d, t.ell, d.order, d.exponent,
                         d.invariants.u, d.invariants.v, int(d.cyclic),
                         g1x, g1y, g2x, g2y])
        header = ["a", "b", "c", "d", "ell", "order", "exponent",
                  "inv_u", "inv_v", "cyclic", "gen1_x", "gen1_y", "gen2_x", "gen2_y"]
        print(_csv_dump(header, rows), end="")
    else:
        for d in descriptors:
            (g1x, g1y), (g2x, g2y) = d.generators
            print(
                f"{d.tuple} order={d.order} exponent={d.exponent} "
                f"invariants=({d.invariants.u},{d.invariants.v}) "
                f"cyclic={'yes' if d.cyclic else 'no'} "
                f"generators=({g1x},{g1y}),({g2x},{g2y})"
            )
    return EXIT_OK


# --- figure --------------------------------------------------------------

FIGURE_MAX_M = 40
FIGURE_MAX_N = 60


def render_figure(m: int, n: int, points) -> str:
    """ASCII grid, rows labeled n-1 down to 0, bullets (*) at subgroup points."""
    pts = set(points)
    roww = len(str(n - 1))
    cellw = len(str(m - 1))
    lines = []
    for y in range(n - 1, -1, -1):
        cells = " ".join(
            f"{'*' if (x, y) in pts else '.':>{cellw}}" for x in range(m)
        )
        lines.append(f"{y:>{roww}} {cells}")
    labels = " ".join(f"{x:>{cellw}}" for x in range(m))
    lines.append(f"{'':>{roww}} {labels}")
    return "\n".join(lines)


def cmd_figure(args) -> int:
    m = _positive(args.m, "m")
    n = _positive(args.n, "n")
    if m > FIGURE_MAX_M or n > FIGURE_MAX_N:
        raise CliError(
            f"figure rendering limited to m <= {FIGURE_MAX_M}, n <= {FIGURE_MAX_N}"
        )
    t = goursat.GoursatTuple(
        _positive(args.a, "a"), _positive(args.b, "b"),
        _positive(args.c, "c"), _positive(args.d, "d"),
        _positive(args.ell, "ell"),
    )
    try:
        s = goursat.materialize(m, n, t)
    except goursat.TupleMembershipError as exc:
        raise CliError(str(exc))

    if args.format == "json":
        print(json.dumps({
            "ambient": [m, n],
            "tuple": [t.a, t.b, t.c, t.d, t.ell],
            "points": [list(p) for p in s.elements],
        }))
    elif args.format == "csv":
        print(_csv_dump(["x", "y"], [list(p) for p in s.elements]), end="")
    else:
        print(render_figure(m, n, s.elements))
    return EXIT_OK


# --- verify --------------------------------------------------------------

def _report_obj(report: oracle.OracleReport) -> dict:
    return {
        "ambient": list(report.ambient),
        "subgroups": report.subgroup_count,
        "mismatches": [
            {"side": side, "key": key, "expected": exp, "actual": act}
            for side, key, exp, act in report.mismatches
        ],
    }


def cmd_verify(args) -> int:
    bound = args.bound
    if args.range is not None:
        m_max = _positive(args.range[0], "m_max")
        n_max = _positive(args.range[1], "n_max")
        pairs = [(m, n) for m in range(1, m_max + 1) for n in range(1, n_max + 1)]
    else:
        if args.m is None or args.n is None:
            raise CliError("verify needs either m n or --range M N")
        pairs = [(_positive(args.m, "m"), _positive(args.n, "n"))]

    reports = []
    for m, n in pairs:
        try:
            reports.append(oracle.cross_check(m, n, bound))
        except oracle.BoundExceededError as exc:
            raise CliError(str(exc))

    total_mismatches = sum(len(r.mismatches) for r in reports)

    if args.format == "json":
        print(json.dumps({
            "pairs": [_report_obj(r) for r in reports],
            "total_mismatches": total_mismatches,
        }))
    elif args.format == "csv":
        rows = [[r.ambient[0], r.ambient[1], r.subgroup_count, len(r.mismatches)]
                for r in reports]
        print(_csv_dump(["m", "n", "subgroups", "mismatches"], rows), end="")
    else:
        if len(reports) == 1:
            r = reports[0]
            status = "OK" if r.ok else "FAIL"
            print(f"{status}, {r.subgroup_count} subgroups, {len(r.mismatches)} mismatches")
            for side, key, exp, act in r.mismatches:
                print(f"  mismatch {side} key={key}: oracle={exp} formula={act}")
        else:
            for r in reports:
                status = "OK" if r.ok else "FAIL"
                print(f"{r.ambient[0]} {r.ambient[1]}: {status} "
                      f"({r.subgroup_count} subgroups)")
                for side, key, exp, act in r.mismatches:
                    print(f"  mismatch {side} key={key}: oracle={exp} formula={act}")
            print(f"{len(reports)} pairs checked, {total_mismatches} mismatches")

    return EXIT_OK if total_mismatches == 0 else EXIT_MISMATCH


# --- entry point ---------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ranktwo",
        description="Enumerate, classify, and count the subgroups of Z_m x Z_n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["plain", "json", "csv"], default="plain")

    p = sub.add_parser("count", parents=[fmt], help="subgroup counts")
    p.add_argument("m")
    p.add_argument("n")
    p.add_argument("--order", help="count only subgroups of this order")
    p.add_argument("--type", help="count only subgroups isomorphic to Z_A x Z_B (A,B)")
    p.add_argument("--cyclic", action="store_true", help="count only cyclic subgroups")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", parents=[fmt], help="full aggregate table")
    p.add_argument("m")
    p.add_argument("n")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("enumerate", parents=[fmt], help="list every subgroup")
    p.add_argument("m")
    p.add_argument("n")
    p.add_argument("--limit", type=int, help="stop after this many subgroups")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("figure", parents=[fmt], help="lattice-point grid of one subgroup")
    p.add_argument("m")
    p.add_argument("n")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("c")
    p.add_argument("d")
    p.add_argument("ell")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("verify", parents=[fmt], help="cross-check against brute force")
    p.add_argument("m", nargs="?")
    p.add_argument("n", nargs="?")
    p.add_argument("--range", nargs=2, metavar=("M_MAX", "N_MAX"),
                   help="check every pair 1..M_MAX x 1..N_MAX")
    p.add_argument("--bound", type=int, default=oracle.DEFAULT_BOUND,
                   help="max m*n for brute force (default %(default)s)")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

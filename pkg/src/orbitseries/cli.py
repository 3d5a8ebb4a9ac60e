"""Command-line interface: browse the registry, print diagrams and gradings,
evaluate point counts, run the verification suites and export the tables."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import rootsystems as rsys
from . import seriesdb as db
from . import serialize, verify
from .exactpoly import QLaurent, ZeroExponentError

USAGE_ERROR = 2


def _fmt_affine(coeffs) -> str:
    s, i = coeffs
    if s == 0:
        return str(i)
    head = "a" if s == 1 else f"{s}a"
    if i == 0:
        return head
    return f"{head}{'+' if i > 0 else '-'}{abs(i)}"


def cmd_list(args) -> int:
    rows = [args.row] if args.row else db.rows()
    for row in rows:
        for rec in db.series_by_row(row):
            print(f"{row:16s} {rec.label:22s} dim O_a = {_fmt_affine(rec.dim_coeffs):8s}"
                  f" dim r(a) = {_fmt_affine(rec.rad_coeffs)}")
    return 0


def cmd_show(args) -> int:
    rec = db.lookup(args.row, args.label)
    print(f"series {rec.label}  (row {rec.row})")
    if rec.exponents:
        print(f"  weight exponents (p,q,r,s) = {rec.exponents}")
    print(f"  dim O_a  = {_fmt_affine(rec.dim_coeffs)}")
    print(f"  dim r(a) = {_fmt_affine(rec.rad_coeffs)}")
    print(f"  fundamental group: {rec.fundamental_group}")
    if rec.so8_partition:
        print(f"  so8 member (a=0): partition {rec.so8_partition}, h = {rec.so8_h}")
    for m in rec.members:
        datum = ""
        if m.family is not None:
            datum = f"  [{m.family.tag}: {m.pair or m.partition or m.sl_pair}]"
        print(f"  a={m.a}: {m.ambient.name:6s} orbit {m.carter:12s} h(a) = {m.h}{datum}")
    for i, claim in rec.grading_claims:
        print(f"  grading claim: dim g(a,{i}) = {claim}")
    for c in rec.characters:
        print(f"  character [{c.name}] = {c.constant} * q^(N-({c.shift})) * (...)"
              f"  for a in {c.a_values}")
    for n in rec.named_degrees:
        print(f"  named degree a={n.a}: {n.label} via [{n.variant}]")
    for note in rec.notes:
        print(f"  note: {note}")
    return 0


def _diagram(args) -> rsys.WeightedDiagram:
    rec = db.lookup(args.row, args.label)
    if rec.exponents is None:
        raise db.UnknownSeriesError(
            f"series {args.label} has no weight-table diagram")
    return rsys.series_weight_to_diagram(*rec.exponents, args.algebra)


def cmd_diagram(args) -> int:
    wd = _diagram(args)
    print(wd.pretty())
    return 0


def cmd_grading(args) -> int:
    wd = _diagram(args)
    dims = rsys.grading_dims(wd)
    if args.json:
        print(json.dumps({str(i): d for i, d in sorted(dims.items())}))
    else:
        for i, d in sorted(dims.items()):
            print(f"{i:3d}: {d}")
        print(f"orbit dimension {rsys.orbit_dim_from_diagram(wd)}")
    return 0


def _pointcount_expr(rec):
    if rec.pointcount is not None:
        return rec.pointcount
    if rec.pointcount_Y is not None:
        return db.MASTER_POINTCOUNT / rec.pointcount_Y
    raise db.UnknownSeriesError(f"series {rec.label} carries no point count")


def cmd_points(args) -> int:
    rec = db.lookup(args.row, args.label)
    expr = _pointcount_expr(rec)
    a = Fraction(args.a)
    num, den = expr.reduced(a)
    if args.q is not None:
        q = Fraction(args.q)
        print(num.eval_at(q) / den.eval_at(q))
        return 0
    if den == QLaurent.one():
        print(num)
    else:
        print(f"({num}) / ({den})")
    return 0


def cmd_verify(args) -> int:
    config = verify.VerifyConfig()
    if args.suite:
        config = verify.VerifyConfig(suites=tuple(args.suite))
    if args.a:
        # restricting to a=1 leaves the character suite exploratory-only
        config = verify.VerifyConfig(
            suites=config.suites,
            pointcount_a=tuple(args.a),
            character_a=tuple(x for x in args.a if x in (2, 4, 8)))
    report = verify.run_all(config)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.as_json())
    print(report.as_text())
    return report.exit_code


def _export_json() -> str:
    return json.dumps(serialize.registry_to_json(), indent=2, sort_keys=True)


def _export_csv() -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["row", "label", "dim", "rad", "a", "ambient", "carter", "h",
                     "dim_at_a"])
    for rec in db.all_series():
        for m in rec.members:
            writer.writerow([rec.row, rec.label, _fmt_affine(rec.dim_coeffs),
                             _fmt_affine(rec.rad_coeffs), m.a, m.ambient.name,
                             m.carter, m.h.name, int(rec.dim_at(m.a))])
    return buf.getvalue()


def _export_latex() -> str:
    lines = []
    for rec in db.all_series():
        label = rec.label.replace("^", r"\^{}")
        carters = ", ".join(m.carter for m in rec.members)
        hs = ", ".join(m.h.name or "0" for m in rec.members)
        lines.append(r"\begin{array}{ll}")
        lines.append(rf"\text{{{label}}} & \dim O_a = {_fmt_affine(rec.dim_coeffs)} \\")
        lines.append(rf" & \dim r(a) = {_fmt_affine(rec.rad_coeffs)} \\")
        lines.append(rf"[{carters}] & h(a) = {hs}")
        lines.append(r"\end{array}")
        lines.append("")
    return "\n".join(lines)


def cmd_export(args) -> int:
    data = {"json": _export_json, "csv": _export_csv, "latex": _export_latex}[
        args.format]()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(data)
    else:
        print(data)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitseries",
        description="Series of nilpotent orbits: tables, diagrams and exact "
                    "verification. Series labels are ASCII: g.g3.gQ^2 names "
                    "the orbit with weight exponents (1,0,1,2).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="series labels and dimension formulas")
    p.add_argument("--row", choices=db.rows())
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("show", help="print one full series record")
    p.add_argument("row", choices=db.rows())
    p.add_argument("label")
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("diagram", help="weighted Dynkin diagram of a member")
    p.add_argument("row", choices=("f4", "e6"))
    p.add_argument("label")
    p.add_argument("--algebra", required=True,
                   help="one of f4, e6, e7, e8")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("grading", help="eigenspace dimensions of the diagram")
    p.add_argument("row", choices=("f4", "e6"))
    p.add_argument("label")
    p.add_argument("--algebra", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_grading)

    p = sub.add_parser("points", help="reduced point-count polynomial or value")
    p.add_argument("row", choices=("f4", "e6"))
    p.add_argument("label")
    p.add_argument("--a", required=True, type=int, choices=(1, 2, 4, 8))
    p.add_argument("--q", type=int)
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--suite", action="append",
                   choices=("dims", "gradings", "pointcounts", "characters",
                            "universal", "errata"))
    p.add_argument("--a", action="append", type=int, choices=(1, 2, 4, 8))
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="dump the registry")
    p.add_argument("--format", required=True, choices=("json", "csv", "latex"))
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE_ERROR if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except (db.UnknownSeriesError, rsys.UnsupportedRankError, ValueError,
            ZeroExponentError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line interface.

Commands: list catalog triples, print Casimir eigenvalues, solve the Einstein
system for a triple, recompute a result table, verify a metric certificate,
and run the golden-data regression suite.  Output is deterministic (metrics
sorted by X_1 ascending, JSON keys sorted) in JSON, CSV, or markdown.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction
from math import lcm
from typing import Optional

from . import catalog, tables
from .casimir import casimir_report, scalarity_test
from .catalog import DomainError
from .einstein import full_solve, verify_metric
from .exact import IsolatedRoot, QuadraticSurd, format_decimal
from .tables import fmt_fraction, fmt_poly

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# value serialization


def _surd_fields(v: QuadraticSurd) -> dict:
    """Wire format {a, s, d, c}: the value (a + s*sqrt(d))/c with integer
    a, s, c, gcd-reduced, c > 0, and d squarefree (d = 0 for rationals)."""
    c = lcm(v.a.denominator, v.coef.denominator)
    a, s = int(v.a * c), int(v.coef * c)
    from math import gcd

    g = gcd(a, s, c)
    return {"a": a // g, "s": s // g, "d": v.d, "c": c // g}


def value_object(v, digits: int) -> dict:
    """Structured exact value plus a decimal rendering; never a float."""
    if isinstance(v, IsolatedRoot):
        dec = v.decimal(digits)
        return {
            "poly": fmt_poly(v.poly),
            "lo": str(v.lo),
            "hi": str(v.hi),
            "decimal": dec,
        }
    if isinstance(v, QuadraticSurd):
        out = _surd_fields(v)
        out["decimal"] = v.decimal(digits)
        return out
    f = Fraction(v)
    return {
        "a": f.numerator,
        "s": 0,
        "d": 0,
        "c": f.denominator,
        "decimal": format_decimal(f, digits),
    }


_SURD_RE = re.compile(
    r"^\(?\s*(?P<a>-?\d+(?:/\d+)?)\s*(?P<sign>[+-])\s*"
    r"(?:(?P<s>\d+(?:/\d+)?)\s*\*\s*)?sqrt\((?P<d>\d+)\)\s*\)?"
    r"(?:\s*/\s*(?P<c>\d+))?$"
)


def parse_value(text: str):
    """Parse a rational 'p/q' or a surd '(A+B*sqrt(D))/C' certificate."""
    text = text.strip()
    try:
        return QuadraticSurd.rational(Fraction(text))
    except ValueError:
        pass
    m = _SURD_RE.match(text)
    if not m:
        raise UsageError(f"malformed metric value {text!r}; expected 'p/q' or '(A+B*sqrt(D))/C'")
    a = Fraction(m.group("a"))
    s = Fraction(m.group("s") or 1)
    if m.group("sign") == "-":
        s = -s
    d = int(m.group("d"))
    c = Fraction(m.group("c") or 1)
    return QuadraticSurd.of(a / c, s / c, d)


# ---------------------------------------------------------------------------
# output rendering


def render(data, fmt: str, headers: Optional[list] = None, rows: Optional[list] = None) -> str:
    """JSON renders `data`; CSV and markdown render `headers` + `rows`."""
    if fmt == "json":
        return json.dumps(data, indent=2, sort_keys=True) + "\n"
    if rows is None:
        raise UsageError("this command only supports --format json")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(headers)
        writer.writerows(rows)
        return buf.getvalue()
    # markdown
    cells = [[str(c) for c in row] for row in rows]
    widths = [max(len(h), *(len(r[i]) for r in cells)) if cells else len(h)
              for i, h in enumerate(headers)]
    def line(vals):
        return "| " + " | ".join(v.ljust(w) for v, w in zip(vals, widths)) + " |"
    out = [line(headers), "|" + "|".join("-" * (w + 2) for w in widths) + "|"]
    out += [line(r) for r in cells]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# argument plumbing


def parse_params(text: Optional[str]) -> dict:
    if not text:
        return {}
    out = {}
    for item in text.split(","):
        if "=" not in item:
            raise UsageError(f"malformed parameter {item!r}; expected k=v")
        k, v = item.split("=", 1)
        try:
            out[k.strip()] = int(v)
        except ValueError:
            raise UsageError(f"parameter {k!r} must be an integer, got {v!r}")
    return out


def get_triple(triple_id: Optional[str]):
    if not triple_id:
        raise UsageError("a triple id is required for this command")
    try:
        return catalog.get(triple_id)
    except KeyError:
        raise DomainError(f"unknown triple id {triple_id!r}")


# ---------------------------------------------------------------------------
# commands


def cmd_list(args) -> int:
    specs = sorted(catalog.enumerate_triples(), key=lambda s: s.id)
    data = [
        {
            "id": s.id,
            "family": s.family,
            "fiber_type": s.fiber_type,
            "params": list(s.params),
            "description": s.description,
        }
        for s in specs
    ]
    headers = ["id", "family", "fiber_type", "params", "description"]
    rows = [[s.id, s.family, s.fiber_type, ",".join(s.params), s.description] for s in specs]
    sys.stdout.write(render(data, args.format, headers, rows))
    return EXIT_OK


def cmd_eigenvalues(args) -> int:
    spec = get_triple(args.triple_id)
    kw = parse_params(args.params)
    rep = casimir_report(spec.build(**kw))
    data = {
        "triple": spec.id,
        "params": kw,
        "gamma": [fmt_fraction(g) for g in rep.gammas],
        "delta": [fmt_fraction(d) for d in rep.deltas],
        "b": [[fmt_fraction(x) for x in rep.b_distinct(a)] for a in range(rep.s)],
        "b_scalar": [rep.b_scalar(a) for a in range(rep.s)],
        "c_kn": fmt_fraction(rep.c_kn),
        "r": fmt_fraction(rep.r),
        "scalarity": scalarity_test(rep),
    }
    headers = ["quantity", "value"]
    rows = [
        ["gamma", "; ".join(data["gamma"])],
        ["delta", "; ".join(data["delta"])],
        ["b", "; ".join("{" + ", ".join(bs) + "}" for bs in data["b"])],
        ["c_kn", data["c_kn"]],
        ["r", data["r"]],
        ["scalarity", data["scalarity"]],
    ]
    sys.stdout.write(render(data, args.format, headers, rows))
    return EXIT_OK


def _metric_obj(m, digits: int) -> dict:
    return {
        "X": [value_object(v, digits) for v in m.values],
        "decimal": list(m.decimal(digits)),
        "mode": m.mode,
        "binormal": m.is_binormal,
        "fiber_einstein": m.fiber_einstein,
    }


def cmd_solve(args) -> int:
    spec = get_triple(args.triple_id)
    kw = parse_params(args.params)
    report = full_solve(spec.build(**kw), triple_id=spec.id, params=kw)
    metrics = sorted(report.metrics, key=lambda m: float(m.values[0]))
    data = {
        "triple": spec.id,
        "params": kw,
        "exists": report.exists,
        "verdict": report.verdict,
        "discriminant": fmt_fraction(report.discriminant) if report.discriminant is not None else None,
        "quartic": fmt_poly(report.quartic) if report.quartic is not None else None,
        "metrics": [_metric_obj(m, args.precision) for m in metrics],
    }
    headers = ["X_decimal", "mode", "binormal", "fiber_einstein"]
    rows = [
        [", ".join(m.decimal(args.precision)), m.mode, m.is_binormal, m.fiber_einstein]
        for m in metrics
    ]
    sys.stdout.write(render(data, args.format, headers, rows))
    return EXIT_OK


def cmd_tables(args) -> int:
    if not args.triple_id:
        raise UsageError("a table id is required; one of " + ", ".join(tables.table_ids()))
    try:
        computed = tables.compute_table(args.triple_id, sweep_max=args.sweep_max)
    except KeyError:
        raise UsageError(f"unknown table id {args.triple_id!r}; one of " + ", ".join(tables.table_ids()))
    except ValueError as e:
        raise UsageError(str(e))
    columns = list(tables._TABLES[args.triple_id].columns)
    keys = sorted(computed)
    data = {"table": args.triple_id, "columns": columns,
            "rows": {k: computed[k] for k in keys}}
    headers = ["key"] + columns
    rows = [[k] + [computed[k][c] for c in columns] for k in keys]
    sys.stdout.write(render(data, args.format, headers, rows))
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = get_triple(args.triple_id)
    kw = parse_params(args.params)
    if not args.metric:
        raise UsageError("verify requires --metric, e.g. --metric X=3/2 or --metric X1=...,X2=...")
    items = args.metric.split(",")
    values = []
    for item in items:
        text = item.split("=", 1)[1] if "=" in item else item
        values.append(parse_value(text))
    rep = casimir_report(spec.build(**kw))
    if len(values) != rep.s:
        raise UsageError(f"{spec.id} has s = {rep.s} fiber factors; got {len(values)} X values")
    if not all(rep.b_scalar(a) for a in range(rep.s)):
        raise DomainError(f"{spec.id}: C_p eigenvalues are non-scalar; no adapted metric to verify")
    bs = [rep.b_values[a][0] for a in range(rep.s)]
    try:
        residual = verify_metric(rep.gammas, bs, rep.r, values)
    except ValueError as e:
        raise UsageError(str(e))
    data = {
        "triple": spec.id,
        "params": kw,
        "X": [value_object(v, args.precision) for v in values],
        "ok": residual.ok,
        "exact": residual.exact,
        "residuals": [str(x) for x in residual.residuals],
    }
    headers = ["quantity", "value"]
    rows = [["ok", residual.ok], ["exact", residual.exact],
            ["residuals", "; ".join(str(x) for x in residual.residuals)]]
    sys.stdout.write(render(data, args.format, headers, rows))
    return EXIT_OK if residual.ok else EXIT_VERIFY


def cmd_verify_golden(args) -> int:
    ids = [args.triple_id] if args.triple_id else list(tables.table_ids())
    for tid in ids:
        if tid not in tables.table_ids():
            raise UsageError(f"unknown table id {tid!r}")
    diffs = [tables.regenerate_table(tid) for tid in ids]
    data = []
    rows = []
    for diff in diffs:
        entry = {
            "table": diff.table_id,
            "passed": diff.passed,
            "cells": len(diff.cells),
            "annotated": len(diff.annotations),
            "failures": [
                {"key": c.key, "column": c.column, "expected": c.expected, "computed": c.computed}
                for c in diff.failures
            ],
            "missing_rows": sorted(diff.missing_rows),
            "extra_rows": sorted(diff.extra_rows),
        }
        data.append(entry)
        rows.append([diff.table_id, "PASS" if diff.passed else "FAIL",
                     len(diff.cells), len(diff.annotations), len(diff.failures)])
    headers = ["table", "status", "cells", "annotated", "failures"]
    sys.stdout.write(render(data, args.format, headers, rows))
    return EXIT_OK if all(d.passed for d in diffs) else EXIT_VERIFY


COMMANDS = {
    "list": cmd_list,
    "eigenvalues": cmd_eigenvalues,
    "solve": cmd_solve,
    "tables": cmd_tables,
    "verify": cmd_verify,
    "verify-golden": cmd_verify_golden,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="einfib",
        description="Exact Einstein metrics on bisymmetric fibrations: "
        "catalog, Casimir eigenvalues, solvers, and golden-table regression.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("triple_id", nargs="?", default=None,
                        help="triple id (or table id for tables/verify-golden)")
    parser.add_argument("--params", default=None, help="comma-separated k=v parameter list")
    parser.add_argument("--format", choices=["json", "csv", "md"], default="json")
    parser.add_argument("--precision", type=int, default=4, help="decimal digits (default 4)")
    parser.add_argument("--sweep-max", type=int, default=None,
                        help="upper bound on n for parametric table sweeps")
    parser.add_argument("--metric", default=None,
                        help="metric certificate for verify, e.g. X=3/2 or X1=(3+sqrt(3))/2,X2=1/2")
    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as e:
        print(f"domain error: {e}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())

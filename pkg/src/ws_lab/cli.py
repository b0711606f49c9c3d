"""ws-lab command line: eval, enumerate, verify, table."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import gl11, sl2
from .diagrams import diagrams_up_to, enumerate_diagrams, parse
from .suites import DEFAULT_MAX_ORDER, SUITES, run_suite

SCHEMA = "ws-lab/1"
TABLE_COLUMNS = (
    "word", "order", "crossings", "sl2_framed", "sl2_deframed", "mm_polynomial",
    "diagonal_W0", "gl11_framed", "gl11_deframed", "alexander_C",
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

EVALUATORS = {
    ("sl2", "framed"): sl2.sl2_framed,
    ("sl2", "deframed"): sl2.sl2_deframed,
    ("gl11", "framed"): gl11.gl11_framed,
    ("gl11", "deframed"): gl11.gl11_deframed,
}


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj)


def cmd_eval(args, out):
    text = args.diagram if args.diagram is not None else args.diagram_pos
    if text is None:
        raise UsageError("eval needs a diagram (--diagram)")
    try:
        D = parse(text).canonical()
    except ValueError as exc:
        raise UsageError(f"cannot parse diagram {text!r}: {exc}") from None
    value = EVALUATORS[args.algebra, args.framing](D)
    if args.json:
        out.write(_dump({
            "schema": SCHEMA,
            "algebra": args.algebra,
            "framing": args.framing,
            "diagram": str(D),
            "value": value.to_json(),
        }) + "\n")
    else:
        out.write(f"{D}\n{value}\n")
    return EXIT_OK


def cmd_enumerate(args, out):
    n = args.n if args.n is not None else args.max_order
    if n is None:
        raise UsageError("enumerate needs an order")
    try:
        diagrams = enumerate_diagrams(n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        out.write(_dump({"schema": SCHEMA, "order": n, "count": len(diagrams),
                         "diagrams": [str(D) for D in diagrams]}) + "\n")
    else:
        for D in diagrams:
            out.write(f"{D}\n")
        out.write(f"count: {len(diagrams)}\n")
    return EXIT_OK


def cmd_verify(args, out):
    suites = SUITES if args.suite == "all" else (args.suite,)
    failed = False
    payload = []
    for suite in suites:
        max_order = args.max_order if args.max_order is not None else DEFAULT_MAX_ORDER[suite]
        reports = run_suite(suite, max_order, args.jobs)
        for rep in reports:
            failed |= not rep.ok
            if args.json:
                payload.append({
                    "suite": suite,
                    "check": rep.name,
                    "passed": rep.ok,
                    "checked": rep.checked,
                    "violations": [{"where": v.where, "lhs": str(v.lhs), "rhs": str(v.rhs)}
                                   for v in rep.violations],
                })
                continue
            out.write(f"[{suite}] {rep.summary()}\n")
            for v in rep.violations:
                out.write(f"    {v}\n")
    if args.json:
        out.write(_dump({"schema": SCHEMA, "passed": not failed, "reports": payload}) + "\n")
    else:
        out.write("RESULT: " + ("FAIL" if failed else "PASS") + "\n")
    return EXIT_FAIL if failed else EXIT_OK


def table_rows(max_order: int):
    for D in diagrams_up_to(max_order):
        yield {
            "word": str(D),
            "order": D.order,
            "crossings": D.crossing_pairs(),
            "sl2_framed": sl2.sl2_framed(D),
            "sl2_deframed": sl2.sl2_deframed(D),
            "mm_polynomial": sl2.mm_polynomial(D),
            "diagonal_W0": sl2.diagonal_W0(D),
            "gl11_framed": gl11.gl11_framed(D),
            "gl11_deframed": gl11.gl11_deframed(D),
            "alexander_C": gl11.alexander_C(D),
        }


def render_table(max_order: int, fmt: str) -> str:
    rows = list(table_rows(max_order))
    if fmt == "json":
        def cell(v):
            if hasattr(v, "to_json"):
                return v.to_json()
            return v if isinstance(v, int) else str(v)

        return _dump({
            "schema": SCHEMA,
            "max_order": max_order,
            "columns": list(TABLE_COLUMNS),
            "rows": [{k: cell(r[k]) for k in TABLE_COLUMNS} for r in rows],
        }) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TABLE_COLUMNS)
    for r in rows:
        writer.writerow([str(r[k]) for k in TABLE_COLUMNS])
    return buf.getvalue()


def cmd_table(args, out):
    max_order = args.max_order if args.max_order is not None else 4
    try:
        diagrams_up_to(max_order)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = render_table(max_order, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ws-lab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a weight system on one diagram")
    p.add_argument("diagram_pos", nargs="?", metavar="DIAGRAM")
    p.add_argument("--diagram")
    p.add_argument("--algebra", choices=("sl2", "gl11"), default="sl2")
    p.add_argument("--framing", choices=("framed", "deframed"), default="framed")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("enumerate", help="list canonical diagrams of one order")
    p.add_argument("n", nargs="?", type=int)
    p.add_argument("--max-order", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--max-order", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="emit a table of all weight values")
    p.add_argument("--max-order", type=int)
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.add_argument("--output")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"ws-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

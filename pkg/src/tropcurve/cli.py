"""Command line interface.

Commands: curve, count, welschinger, paths, report.
Exit codes: 0 success, 1 user error, 2 internal consistency failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import curve as curvemod
from . import paths as pathsmod
from .document import curve_document, write_document
from .errors import CrossCheckMismatchError, ImbalancedError, TropcurveError
from .invariants import asymptotic_report, build_table, km_count
from .polynomial import parse_expression, parse_term_table
from .svgout import render_svg

EXIT_OK = 0
EXIT_USER = 1
EXIT_INTERNAL = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropcurve",
        description="Exact tropical plane curves and enumerative invariants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_lambda(p):
        p.add_argument(
            "--lambda",
            dest="lambda_order",
            choices=[pathsmod.ORDER_XEY, pathsmod.ORDER_ROWMAJOR],
            default=pathsmod.ORDER_XEY,
            help="point order preset for path enumeration (default: xey)",
        )

    p_curve = sub.add_parser("curve", help="extract a tropical curve and emit JSON/SVG")
    group = p_curve.add_mutually_exclusive_group(required=True)
    group.add_argument("--expr", help="expression like 'max(0, x, y)'")
    group.add_argument("--poly", help="path to a term-table file")
    p_curve.add_argument("--json", dest="json_path", help="write curve JSON here")
    p_curve.add_argument("--svg", dest="svg_path", help="write curve SVG here")

    p_count = sub.add_parser("count", help="rational curve count N_d")
    p_count.add_argument("-d", "--degree", type=int, required=True)
    p_count.add_argument(
        "--method",
        choices=["paths", "recursion", "both"],
        default="both",
    )
    add_lambda(p_count)

    p_w = sub.add_parser("welschinger", help="Welschinger invariant W_d")
    p_w.add_argument("-d", "--degree", type=int, required=True)
    add_lambda(p_w)

    p_paths = sub.add_parser("paths", help="list lattice paths with multiplicities")
    p_paths.add_argument("-d", "--degree", type=int, required=True)
    p_paths.add_argument("--nonzero-only", action="store_true")
    add_lambda(p_paths)

    p_report = sub.add_parser("report", help="invariant table and asymptotics")
    p_report.add_argument("--max", dest="dmax", type=int, required=True)
    add_lambda(p_report)

    return parser


def _load_polynomial(args):
    if args.expr is not None:
        return parse_expression(args.expr)
    text = Path(args.poly).read_text(encoding="utf-8")
    return parse_term_table(text)


def cmd_curve(args) -> int:
    poly = _load_polynomial(args)
    curve = curvemod.extract_curve(poly)
    violations = curvemod.check_balancing(curve)
    if violations:
        print(f"error: balancing violated at vertices {violations}", file=sys.stderr)
        return EXIT_INTERNAL
    doc = curve_document(curve)
    text = write_document(doc)
    wrote = False
    if args.json_path:
        Path(args.json_path).write_text(text, encoding="utf-8")
        wrote = True
    if args.svg_path:
        Path(args.svg_path).write_text(render_svg(doc), encoding="utf-8")
        wrote = True
    if not wrote:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_count(args) -> int:
    if args.method == "recursion":
        print(km_count(args.degree))
        return EXIT_OK
    if args.method == "paths":
        print(pathsmod.count_gw(args.degree, args.lambda_order))
        return EXIT_OK
    n_paths = pathsmod.count_gw(args.degree, args.lambda_order)
    n_rec = km_count(args.degree)
    print(f"{n_paths} {n_rec}")
    if n_paths != n_rec:
        print("error: path count and recursion disagree", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_welschinger(args) -> int:
    print(pathsmod.count_welschinger(args.degree, args.lambda_order))
    return EXIT_OK


def _format_path(path) -> str:
    return "->".join(f"({x},{y})" for x, y in path)


def cmd_paths(args) -> int:
    domain = pathsmod.path_domain(args.degree, args.lambda_order)
    print("# path  mu+ mu- mu nu")
    total_mu = 0
    total_nu = 0
    for path in pathsmod.enumerate_paths(domain):
        m = pathsmod.path_multiplicity(path, domain)
        total_mu += m.complex_total
        total_nu += m.welschinger_total
        if args.nonzero_only and m.complex_total == 0:
            continue
        print(
            f"{_format_path(path)}  {m.complex_plus} {m.complex_minus} "
            f"{m.complex_total} {m.welschinger_total}"
        )
    print(f"# total mu={total_mu} nu={total_nu}")
    return EXIT_OK


def cmd_report(args) -> int:
    table = build_table(args.dmax, args.lambda_order)
    failed = False
    for row in table.rows:
        flags = (
            f"bound={'ok' if row.bound_ok else 'FAIL'} "
            f"dominance={'ok' if row.dominance_ok else 'FAIL'} "
            f"parity={'ok' if row.parity_ok else 'FAIL'}"
        )
        print(
            f"d={row.d} N_paths={row.n_paths} N_recursion={row.n_recursion} "
            f"W={row.w} {flags}"
        )
        if not (row.bound_ok and row.dominance_ok and row.parity_ok):
            failed = True
    for row in asymptotic_report(table):
        real = "" if row.real_gap_per_d is None else f" (logN-logW)/d={row.real_gap_per_d:.4f}"
        print(
            f"d={row.d} logN={row.log_n:.4f} 3dlogd={row.three_d_log_d:.4f} "
            f"gap/d={row.gap_per_d:.4f}{real}"
        )
    return EXIT_INTERNAL if failed else EXIT_OK


_HANDLERS = {
    "curve": cmd_curve,
    "count": cmd_count,
    "welschinger": cmd_welschinger,
    "paths": cmd_paths,
    "report": cmd_report,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses status 2 for usage errors; that is a user error here
        return EXIT_USER if exc.code else EXIT_OK
    try:
        return _HANDLERS[args.command](args)
    except (CrossCheckMismatchError, ImbalancedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except TropcurveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER


if __name__ == "__main__":
    sys.exit(main())

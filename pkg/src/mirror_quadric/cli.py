"""Command-line front end: ``mirror-quadric <subcommand> --quadric N ...``.

Exit codes: 0 when everything requested passes, 1 on a verification
failure (the first counterexample is printed), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import __version__
from .cohomology import check_dimension
from .dmodule import DEFAULT_SEED
from .flat_sections import ROUTES, as_class, coefficient_rows, gw_invariant, rows_to_csv
from .lg_models import build_model
from .suites import SUITES, run_suite

MODELS = ("canonical", "givental", "prz", "lusztig")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="mirror-quadric", description="Landau-Ginzburg mirrors of quadrics Q_N.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)

    def cmd(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--quadric", "-N", type=int, required=True, metavar="N", help="dimension N >= 3")
        return sp

    sp = cmd("superpotential", "print a superpotential")
    sp.add_argument("--model", choices=MODELS, default="canonical")
    sp.add_argument("--json", action="store_true")

    sp = cmd("series", "coefficients of the flat section")
    sp.add_argument("--order", type=int, required=True, metavar="K")
    sp.add_argument("--component", default=None, help="class index, 'mid' for the second middle class")
    sp.add_argument("--route", choices=ROUTES + ("all",), default="all")
    sp.add_argument("--csv", action="store_true")

    sp = cmd("critical", "closed-form critical points")
    sp.add_argument("--json", action="store_true")

    sp = cmd("quiver", "superpotential quiver")
    sp.add_argument("--dot", action="store_true")

    sp = cmd("gw", "one-point invariant <[pt] psi^(kN-2)>_k")
    sp.add_argument("--degree", type=int, required=True, metavar="k")

    sp = cmd("verify", "run verification suites")
    sp.add_argument("--suite", choices=SUITES + ("all",), default="all")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return ap


def _superpotential(args, out) -> int:
    model = build_model(args.model, args.quadric)
    if args.json:
        out.write(model.to_json() + "\n")
        return 0
    out.write(f"model: {model.name}  N = {model.N}\n")
    out.write(f"variables: {', '.join(model.variables)}\n")
    out.write(f"W = {model.superpotential}\n")
    for c in model.constraints:
        out.write(f"constraint: {c} = 0\n")
    return 0


def _series(args, out) -> int:
    N = args.quadric
    if args.order < 0:
        raise UsageError("--order must be >= 0")
    routes = ROUTES if args.route == "all" else (args.route,)
    comps = None if args.component is None else [as_class(N, args.component)]
    rows = coefficient_rows(N, args.order, comps, routes)
    if args.csv:
        out.write(rows_to_csv(rows))
        return 0
    table = {}
    for r in rows:
        table.setdefault((r.ell, r.k), {})[r.route] = r
    header = ["class", "k", "hbar^"] + list(routes)
    lines = [header]
    for (c, k), byroute in table.items():
        first = next(iter(byroute.values()))
        lines.append([str(c), str(k), str(-first.hbar_exponent)] + [str(byroute[r].value) for r in routes])
    widths = [max(len(row[i]) for row in lines) for i in range(len(header))]
    for row in lines:
        out.write("  ".join(x.rjust(w) for x, w in zip(row, widths)).rstrip() + "\n")
    if len(routes) > 1:
        bad = [key for key, v in table.items() if len({r.value for r in v.values()}) != 1]
        if bad:
            c, k = bad[0]
            out.write(f"routes disagree at class {c}, k={k}\n")
            return 1
    return 0


def _critical(args, out) -> int:
    from .critical import CriticalityFailure, critical_report, critical_report_json

    try:
        if args.json:
            out.write(critical_report_json(args.quadric) + "\n")
            return 0
        rep = critical_report(args.quadric)
    except CriticalityFailure as exc:
        out.write(f"FAIL {exc}\n")
        return 1
    out.write(f"N = {rep['N']}, {rep['count']} critical points counted with multiplicity\n")
    for pt, val in zip(rep["points"], rep["values"]):
        out.write(f"[{pt['label']}] over {pt['algebra']}, multiplicity {pt['multiplicity']}, W = {val}\n")
        for k, v in pt["coords"].items():
            out.write(f"  {k} = {v}\n")
    for label, charts in rep["chart_membership"].items():
        flags = ", ".join(f"{c}: {'yes' if ok else 'no'}" for c, ok in sorted(charts.items()))
        out.write(f"chart membership [{label}]: {flags}\n")
    return 0


def _quiver(args, out) -> int:
    from .quiver import quadric_quiver, superpotential_from_quiver

    qv = quadric_quiver(args.quadric)
    if args.dot:
        out.write(qv.to_dot())
        return 0
    for a in qv.arrows:
        out.write(f"{a.tail} -> {a.head}  {a.label or '(solved)'}\n")
    out.write(f"W = {superpotential_from_quiver(qv)}\n")
    return 0


def _gw(args, out) -> int:
    if args.degree < 1:
        raise UsageError("--degree must be >= 1")
    out.write(f"{gw_invariant(args.quadric, args.degree)}\n")
    return 0


def _verify(args, out) -> int:
    out.write(f"seed: {args.seed}\n")
    checks = run_suite(args.quadric, args.suite, args.seed)
    failed = None
    for c in checks:
        out.write(c.line() + "\n")
        for n in c.notes:
            out.write(f"  NOTE {n}\n")
        if not c.ok and failed is None:
            failed = c
    passed = sum(c.ok for c in checks)
    out.write(f"{passed}/{len(checks)} checks passed\n")
    if failed is not None:
        out.write(f"first counterexample: {failed.suite}: {failed.name}: {failed.detail}\n")
        return 1
    return 0


HANDLERS = {
    "superpotential": _superpotential,
    "series": _series,
    "critical": _critical,
    "quiver": _quiver,
    "gw": _gw,
    "verify": _verify,
}


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        check_dimension(args.quadric)
        return HANDLERS[args.command](args, out)
    except (UsageError, ValueError) as exc:
        err.write(f"mirror-quadric: error: {exc}\n")
        err.write(parser.format_usage())
        return 2


if __name__ == "__main__":
    sys.exit(main())

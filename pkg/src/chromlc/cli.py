"""Command-line front end.

Exit codes: 0 success, 2 usage or parse error, 3 resource budget exceeded,
4 a verification failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import __version__
from .bounds import check_root_bound, fp_constant, sokal_constant, sokal_objective
from .chromatic import DEFAULT_MAX_VERTICES, chromatic_polynomial
from .concavity import (
    asymptotic_ratio_report,
    logcc_scan,
    modified_example_sides,
    seymour_report,
    threshold_q0,
)
from .errors import BudgetExceededError, GraphParseError, InvalidParameterError
from .graph import Graph, chromatic_number, max_degree, parse_graph
from .svg import roots_svg
from .verify import ORACLE_MAX_EDGES, verify_ensemble

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_VERIFY = 0, 2, 3, 4
CHI_MAX_N = 20


class UsageError(Exception):
    pass


def _read_graph(args) -> Graph:
    path = args.graph or args.input
    if path is None:
        raise UsageError("no graph given (positional path or --input; '-' reads stdin)")
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            with open(path, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc}") from exc
    return parse_graph(data)


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()


# -- subcommands ---------------------------------------------------------------------

def cmd_poly(args) -> int:
    g = _read_graph(args)
    p = chromatic_polynomial(g, max_vertices=args.budget_vertices)
    if args.format == "json":
        _emit(args, p.to_json() + "\n")
    elif args.format == "csv":
        _emit(args, _csv([("power", "coefficient")] + list(enumerate(p.coeffs))))
    else:
        _emit(args, str(p) + "\n")
    return EXIT_OK


def cmd_roots(args) -> int:
    g = _read_graph(args)
    kstar = fp_constant().value
    rep = check_root_bound(g, kstar, args.tolerance, max_vertices=args.budget_vertices)
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(roots_svg(rep.roots, rep.bound))
    if args.format == "json":
        _emit(args, rep.to_json() + "\n")
    elif args.format == "csv":
        _emit(args, _csv([("re", "im")] + [(repr(z.real), repr(z.imag)) for z in rep.roots]))
    else:
        lines = [f"{z.real:+.10f} {z.imag:+.10f}i" for z in rep.roots]
        lines.append(
            f"max modulus {rep.max_modulus:.6f}, bound K*·Δ = {rep.bound:.6f}: "
            + ("pass" if rep.passed else "FAIL")
        )
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if rep.passed else EXIT_VERIFY


def cmd_logcc(args) -> int:
    g = _read_graph(args)
    p = chromatic_polynomial(g, max_vertices=args.budget_vertices)
    delta = max_degree(g)
    lo = args.lo
    hi = args.hi if args.hi is not None else max(threshold_q0(delta) + 10, lo)
    if lo > hi:
        raise UsageError(f"empty range --lo {lo} --hi {hi}")
    chi = chromatic_number(g) if g.n <= CHI_MAX_N else None
    rep = logcc_scan(p, lo, hi, delta, chromatic_number=chi)
    if args.format == "json":
        _emit(args, json.dumps(rep.to_dict()) + "\n")
    elif args.format == "csv":
        _emit(args, _csv([("q", "log_concave")] + [(q, int(ok)) for q, ok in rep.results.items()]))
    else:
        _emit(args, (
            f"q in [{lo}, {hi}], Δ = {delta}, χ = {chi}, threshold q0 = {rep.threshold_q0}\n"
            f"violations: {rep.violations or 'none'}\n"
            f"violations at q >= q0: {rep.contradictions or 'none'}\n"
        ))
    return EXIT_VERIFY if rep.contradictions else EXIT_OK


def cmd_seymour(args) -> int:
    if args.n_lo < 1 or args.n_lo > args.n_hi:
        raise UsageError("need 1 <= --n-lo <= --n-hi")
    rep = seymour_report(args.n_lo, args.n_hi)
    if args.format == "json":
        _emit(args, rep.to_json() + "\n")
    elif args.format == "csv":
        _emit(args, rep.to_csv())
    else:
        lines = [f"{'n':>4} {'bounds':>7} {'P5·P7>P6²':>10} {'Δ':>5} {'5n-5':>5}"]
        for r in rep.rows:
            lines.append(
                f"{r.n:>4} {''.join('y' if b else 'n' for b in r.bounds_hold):>7} "
                f"{str(r.inequality_holds):>10} {r.max_degree:>5} {r.stated_max_degree:>5}"
            )
        lines.append(f"all bounds hold: {rep.all_bounds_hold}")
        lines.append(f"inequality holds from n = {rep.n_star} through {args.n_hi}")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_modified(args) -> int:
    if args.k_lo > args.k_hi:
        raise UsageError("need --k-lo <= --k-hi")
    rows = []
    for k in range(args.k_lo, args.k_hi + 1):
        lhs, rhs = modified_example_sides(args.n, k)
        rows.append({"n": args.n, "k": k, "direct": str(lhs), "formula": str(rhs), "equal": lhs == rhs})
    ratio = asymptotic_ratio_report(max(args.ratio_hi, 7))
    ratios = [{"n": r.n, "ratio": f"{r.ratio.numerator}/{r.ratio.denominator}",
               "approx": float(r.ratio), "within": r.within} for r in ratio["rows"]]
    ok = all(r["equal"] for r in rows) and ratio["all_within"]
    if args.format == "json":
        _emit(args, json.dumps({"identity": rows, "ratios": ratios,
                                "monotone": ratio["monotone"], "passed": ok}) + "\n")
    elif args.format == "csv":
        _emit(args, _csv([("n", "k", "direct", "formula", "equal")]
                         + [(r["n"], r["k"], r["direct"], r["formula"], int(r["equal"])) for r in rows]))
    else:
        lines = [f"n={r['n']} k={r['k']}: {'equal' if r['equal'] else 'DIFFER'} ({r['direct']})" for r in rows]
        lines.append(f"(n^2-6n+7)/(n^2-1) at n={ratios[-1]['n']}: {ratios[-1]['approx']:.6f}, "
                     f"monotone={ratio['monotone']}")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_constants(args) -> int:
    k = sokal_constant(args.tolerance)
    ks = fp_constant(args.tolerance)
    at_two_fifths = sokal_objective(float(Fraction(2, 5)))
    data = {
        "K": {"value": k.value, "argmin": k.argmin, "bracket": list(k.bracket),
              "tolerance": k.tolerance, "F_at_2_5": at_two_fifths},
        "K_star": {"value": ks.value, "argmin": ks.argmin, "bracket": list(ks.bracket),
                   "tolerance": ks.tolerance},
    }
    if args.format == "json":
        _emit(args, json.dumps(data) + "\n")
    elif args.format == "csv":
        _emit(args, _csv([("name", "value", "argmin", "lo", "hi"),
                          ("K", k.value, k.argmin, *k.bracket),
                          ("K_star", ks.value, ks.argmin, *ks.bracket)]))
    else:
        _emit(args, (
            f"K  = {k.value:.9f} at a = {k.argmin:.9f} (F(2/5) = {at_two_fifths:.6f})\n"
            f"K* = {ks.value:.9f} at y = {ks.argmin:.9f}\n"
        ))
    return EXIT_OK if k.value < 8 and ks.value < 7 else EXIT_VERIFY


def cmd_verify(args) -> int:
    if args.count < 0:
        raise UsageError("--count must be >= 0")
    s = verify_ensemble(args.seed, args.count, max_vertices=args.budget_vertices,
                        max_edges=args.budget_edges)
    d = s.to_dict()
    if args.format == "json":
        _emit(args, json.dumps(d, sort_keys=True) + "\n")
    elif args.format == "csv":
        flat = {k: (len(v) if isinstance(v, list) else v) for k, v in d.items()}
        _emit(args, _csv([tuple(flat), tuple(flat.values())]))
    else:
        _emit(args, (
            f"oracle agreement: {s.oracle_checks} checks on {s.oracle_graphs} graphs, "
            f"{len(s.oracle_mismatches)} mismatches\n"
            f"root bound: {s.root_graphs} graphs, {len(s.root_failures)} failures\n"
            f"log-concavity threshold: {s.threshold_graphs} graphs, "
            f"{len(s.threshold_contradictions)} violations at or above q0 "
            f"({s.below_threshold_violations} below)\n"
            f"factor inequalities: {s.sweep_samples} samples, {s.sweep_failures} failures\n"
            f"{'PASS' if s.passed else 'FAIL'}\n"
        ))
    return EXIT_OK if s.passed else EXIT_VERIFY


def _positive_int(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="graph file in edge-list format ('-' for stdin)")
    common.add_argument("--output", help="write the result here instead of stdout")
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--budget-vertices", type=_positive_int, default=DEFAULT_MAX_VERTICES)
    common.add_argument("--budget-edges", type=_positive_int, default=ORACLE_MAX_EDGES)
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--tolerance", type=_positive_float, default=None,
                        help="constants: search tolerance (1e-9); roots: bound slack (1e-6)")
    common.add_argument("--svg", help="roots: also write a static SVG plot here")

    parser = argparse.ArgumentParser(prog="chromlc", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, graph=False):
        p = sub.add_parser(name, parents=[common], help=help_)
        if graph:
            p.add_argument("graph", nargs="?", help="graph file (same as --input)")
        p.set_defaults(func=func)
        return p

    add("poly", cmd_poly, "exact chromatic polynomial", graph=True)
    add("roots", cmd_roots, "chromatic roots and the K*·Δ root bound", graph=True)
    p = add("logcc", cmd_logcc, "log-concavity scan over integer q", graph=True)
    p.add_argument("--lo", type=int, default=0)
    p.add_argument("--hi", type=int, default=None, help="default: threshold q0 + 10")
    p = add("seymour", cmd_seymour, "exact table for Seymour's graphs H(n)")
    p.add_argument("--n-lo", type=int, default=1)
    p.add_argument("--n-hi", type=int, default=200)
    p = add("modified", cmd_modified, "identity check for the modified example S(n)")
    p.add_argument("--n", type=int, default=7)
    p.add_argument("--k-lo", type=int, default=None)
    p.add_argument("--k-hi", type=int, default=None)
    p.add_argument("--ratio-hi", type=int, default=100)
    add("constants", cmd_constants, "root-bound constants K and K*")
    p = add("verify", cmd_verify, "seeded ensemble verification")
    p.add_argument("--count", type=int, default=100)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.tolerance is None:
        args.tolerance = 1e-9 if args.command == "constants" else 1e-6
    if args.command == "modified":
        m = args.n * args.n - 6 * args.n
        args.k_lo = m + 3 if args.k_lo is None else args.k_lo
        args.k_hi = args.k_lo + 4 if args.k_hi is None else args.k_hi
    try:
        return args.func(args)
    except GraphParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, InvalidParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())

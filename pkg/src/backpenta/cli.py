"""Command-line front end: solve, check and gen on system files.

System file format: '#'-prefixed comment lines are ignored; the remaining
lines must be exactly 7 data lines:

    line 1: n
    lines 2-6: the bands a~ (n-2 entries), a (n-1), d (n), b (n-1),
               b~ (n-2), whitespace-separated
    line 7: the right-hand side y (n entries)

Entries are integers, exact decimals, or p/q rationals.

Exit codes: 0 success, 1 usage/parse error, 2 zero-pivot failure
(float/exact modes), 3 singular system or substitution pole.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import __version__
from .oracle import GeneratorConfig, Singular, dense_solve, generate
from .ratfunc import PoleAtZero, from_literal
from .solver import (ZeroPivot, back_substitute, determinant, factor,
                     factor_symbolic, forward_sweep, solve, solve_symbolic)
from .systems import (BackwardPentaSystem, LengthMismatch, SizeTooSmall,
                      densify, new_system, reverse_rows)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_ZERO_PIVOT = 2
EXIT_SINGULAR = 3


class ParseError(ValueError):
    pass


def parse_system_text(text: str) -> BackwardPentaSystem:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines())
             if ln and not ln.startswith("#")]
    if len(lines) != 7:
        raise ParseError(f"expected 7 data lines, found {len(lines)}")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"first data line must be n, got {lines[0]!r}") from None
    try:
        vectors = [[from_literal(tok) for tok in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if len(vectors[2]) != n:
        raise ParseError(f"d line has {len(vectors[2])} entries but n={n}")
    try:
        return new_system(*vectors[:5], vectors[5])
    except (SizeTooSmall, LengthMismatch) as exc:
        raise ParseError(str(exc)) from None


def read_system(path: str) -> BackwardPentaSystem:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_system_text(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def format_system(system: BackwardPentaSystem, header: str = "") -> str:
    out = []
    if header:
        out.append(f"# {header}")
    out.append(str(system.n))
    for vec in (system.a_tilde, system.a, system.d, system.b,
                system.b_tilde, system.y):
        out.append(" ".join(_fmt(v) for v in vec))
    return "\n".join(out) + "\n"


def _fmt(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def cmd_solve(args) -> int:
    try:
        system = read_system(args.path)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.mode == "symbolic":
            report = solve_symbolic(system)
        else:
            report = solve(system, mode=args.mode, tol=args.tol)
    except ZeroPivot as exc:
        print(f"zero pivot beta[{exc.index}]", file=sys.stderr)
        return EXIT_ZERO_PIVOT
    except PoleAtZero as exc:
        print(f"singular: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    if args.dump_factors:
        lu = _refactor(system, args.mode, args.tol)
        print("alpha =", " ".join(_fmt(v) for v in lu.alpha))
        print("beta  =", " ".join(_fmt(v) for v in lu.beta))
        print("gamma =", " ".join(_fmt(v) for v in lu.gamma))
        print("z     =", " ".join(_fmt(v) for v in report.z))
    for xi in report.x:
        print(_fmt(xi))
    if args.det:
        print(f"det(A1) = {_fmt(report.det)}")
    return EXIT_OK


def _refactor(system, mode, tol):
    # Re-derive the factor vectors for --dump-factors output.
    if mode == "symbolic":
        lifted = system.map_scalars(Fraction)
        return factor_symbolic(reverse_rows(lifted))
    lifted = system.map_scalars(float if mode == "float" else Fraction)
    return factor(reverse_rows(lifted), tol=tol)


def cmd_check(args) -> int:
    try:
        system = read_system(args.path)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    banded_err = None
    try:
        report = solve(system, mode="exact")
    except ZeroPivot:
        try:
            report = solve_symbolic(system)
        except PoleAtZero as exc:
            report, banded_err = None, exc
    oracle_err = None
    try:
        oracle_x = dense_solve(densify(system), system.y)
    except Singular as exc:
        oracle_x, oracle_err = None, exc
    if report is None and oracle_x is None:
        print("SINGULAR: both the banded and the dense path report no "
              "unique solution", file=sys.stderr)
        return EXIT_SINGULAR
    if report is None or oracle_x is None or tuple(report.x) != tuple(oracle_x):
        print("MISMATCH")
        print("banded:", "singular" if report is None
              else " ".join(_fmt(v) for v in report.x))
        print("oracle:", "singular" if oracle_x is None
              else " ".join(_fmt(v) for v in oracle_x))
        return EXIT_SINGULAR if banded_err or oracle_err else EXIT_USAGE
    print("MATCH")
    print("x:", " ".join(_fmt(v) for v in report.x))
    print(f"mode: {report.mode}")
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        config = GeneratorConfig(seed=args.seed, n=args.n,
                                 entry_range=args.range,
                                 force_zero_pivots=tuple(args.zero))
        system = generate(config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    header = (f"generated: seed={args.seed} n={args.n} range={args.range}"
              + (f" zero={','.join(args.zero)}" if args.zero else ""))
    text = format_system(system, header)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="backpenta",
                     description="Solve backward pentadiagonal linear systems.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve a system file")
    p_solve.add_argument("path")
    p_solve.add_argument("--mode", choices=("float", "exact", "symbolic"),
                         default="exact")
    p_solve.add_argument("--det", action="store_true",
                         help="also print det(A1)")
    p_solve.add_argument("--tol", type=float, default=None,
                         help="float mode: treat |beta_i| < tol as a zero pivot")
    p_solve.add_argument("--dump-factors", action="store_true",
                         help="print the alpha/beta/gamma/z vectors")
    p_solve.set_defaults(func=cmd_solve)

    p_check = sub.add_parser("check",
                             help="cross-check against the dense exact oracle")
    p_check.add_argument("path")
    p_check.set_defaults(func=cmd_check)

    p_gen = sub.add_parser("gen", help="generate a random system file")
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--range", type=int, default=9)
    p_gen.add_argument("--zero", action="append", default=[],
                       metavar="BAND_POS",
                       help="zero a band entry, e.g. d_n (repeatable)")
    p_gen.add_argument("--out", default=None)
    p_gen.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except ParseError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args)


def entry():
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 success or true verdict, 1 false verdict, 2 input error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import cells, lgv, pfaffians, positivity, so2n
from .exact import Matrix, rational

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


def load_matrix(path: str) -> Matrix:
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "n" not in doc or "entries" not in doc:
        raise InputError('matrix file must be an object with "n" and "entries"')
    n, entries = doc["n"], doc["entries"]
    if not isinstance(n, int) or n < 1:
        raise InputError('"n" must be a positive integer')
    if not isinstance(entries, list) or len(entries) != n or any(
        not isinstance(row, list) or len(row) != n for row in entries
    ):
        raise InputError(f'"entries" must be a {n}x{n} grid')
    try:
        grid = [[rational(x) for x in row] for row in entries]
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    try:
        return positivity.skew_matrix(grid)
    except positivity.NotSkew as exc:
        raise InputError(str(exc)) from exc


def matrix_document(A: Matrix) -> dict:
    return {"n": A.rows, "entries": [[str(x) for x in row] for row in A.entries]}


def parse_params(text: str | None, count: int, use_random: bool, seed: int | None) -> list[Fraction]:
    if use_random:
        rng = random.Random(seed)
        return [Fraction(rng.randint(1, 2**16), rng.randint(1, 2**16)) for _ in range(count)]
    if text is None:
        raise InputError("give --t or --random")
    try:
        values = [rational(tok) for tok in text.split(",") if tok.strip()]
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    if len(values) != count:
        raise InputError(f"expected {count} parameters, got {len(values)}")
    if any(v <= 0 for v in values):
        raise InputError("parameters must be positive")
    return values


def _jk(jk) -> str:
    return f"{jk[0]},{jk[1]}"


def _subset(I) -> str:
    return ",".join(str(i) for i in I)


def emit(report: dict, fmt: str) -> None:
    if fmt == "structured":
        print(json.dumps(report, indent=2))
        return
    for key, value in report.items():
        if isinstance(value, dict):
            print(f"{key}:")
            for k, v in value.items():
                print(f"  {k}: {json.dumps(v) if isinstance(v, (dict, list)) else v}")
        elif isinstance(value, list):
            print(f"{key}: {', '.join(str(x) for x in value)}")
        else:
            print(f"{key}: {value}")


def cmd_check_positive(args) -> int:
    A = load_matrix(args.matrix)
    ok, table = positivity.is_totally_positive(A)
    emit({
        "command": "check-positive",
        "n": A.rows,
        "verdict": "positive" if ok else "not-positive",
        "minors": {_jk(jk): str(v) for jk, v in table.items()},
    }, args.format)
    return EXIT_OK if ok else EXIT_FALSE


def cmd_check_nonnegative(args) -> int:
    A = load_matrix(args.matrix)
    report = positivity.is_totally_nonnegative(A)
    leading = {
        _jk(jk): (None if lt is None else {"degree": lt[0], "coefficient": str(lt[1])})
        for jk, lt in report.leading.items()
    }
    emit({
        "command": "check-nonnegative",
        "n": A.rows,
        "verdict": report.verdict,
        "witness": None if report.witness is None else _jk(report.witness),
        "leading": leading,
    }, args.format)
    return EXIT_OK if report.nonnegative else EXIT_FALSE


def cmd_identify_cell(args) -> int:
    A = load_matrix(args.matrix)
    try:
        label = cells.identify_cell(so2n.point_from_skew(A))
    except cells.NotRecognized as exc:
        emit({"command": "identify-cell", "n": A.rows, "cell": None, "reason": str(exc)}, args.format)
        return EXIT_FALSE
    emit({
        "command": "identify-cell",
        "n": A.rows,
        "cell": str(label),
        "dimension": label.dimension,
    }, args.format)
    return EXIT_OK


def cmd_sample(args) -> int:
    if args.n is None or args.n < 2:
        raise InputError("--n must be at least 2")
    t = parse_params(args.t, so2n.num_params(args.n), args.random, args.seed)
    A = so2n.chart(so2n.marsh_rietsch(args.n, t))
    print(json.dumps(matrix_document(A), indent=2))
    return EXIT_OK


def _label(args) -> cells.CellLabel:
    if not args.cell:
        raise InputError('--cell "v;w" is required')
    try:
        return cells.parse_label(args.cell)
    except cells.InvalidLabel as exc:
        raise InputError(str(exc)) from exc


def cmd_sample_cell(args) -> int:
    label = _label(args)
    t = parse_params(args.t, label.dimension, args.random, args.seed)
    point = cells.sample_cell(label, t)
    try:
        A = so2n.chart(point)
    except so2n.NotInChart:
        print(f"cell {label} does not meet the skew-symmetric chart", file=sys.stderr)
        return EXIT_FALSE
    print(json.dumps(matrix_document(A), indent=2))
    return EXIT_OK


def cmd_pfaffians(args) -> int:
    A = load_matrix(args.matrix)
    n = A.rows
    strict, _ = pfaffians.check_sign_pattern(A, strict=True)
    weak, weak_witness = pfaffians.check_sign_pattern(A, strict=False)
    verdict = "pf-positive" if strict else ("pf-nonnegative" if weak else "violated")
    pfs = pfaffians.pfaffian_vector(A)
    spin = pfaffians.spinor_coords(A)
    emit({
        "command": "pfaffians",
        "n": n,
        "verdict": verdict,
        "witness": None if weak else _subset(weak_witness),
        "pfaffians": {_subset(I): str(pfs[I]) for I in pfaffians.even_subsets(n)},
        "spinor": {_subset(I): str(spin[I]) for I in pfaffians.even_subsets(n)},
    }, args.format)
    return EXIT_OK if weak else EXIT_FALSE


def cmd_recover_params(args) -> int:
    A = load_matrix(args.matrix)
    try:
        t = positivity.recover_params(A)
    except positivity.OutsideRecoverableLocus as exc:
        emit({"command": "recover-params", "n": A.rows, "t": None, "reason": str(exc)}, args.format)
        return EXIT_FALSE
    positive = all(x > 0 for x in t)
    emit({
        "command": "recover-params",
        "n": A.rows,
        "t": [str(x) for x in t],
        "positive": positive,
    }, args.format)
    return EXIT_OK


def cmd_lgv_export(args) -> int:
    if args.cell:
        label = _label(args)
        d = lgv.build_boundary(label.v, label.w)
    else:
        if args.n is None or args.n < 2:
            raise InputError("give --n (at least 2) or --cell")
        if args.n > lgv.MAX_ENUMERATION_N and not args.allow_large:
            raise InputError(f"n > {lgv.MAX_ENUMERATION_N} needs --allow-large")
        d = lgv.build_top(args.n)
    sys.stdout.write(lgv.export_dot(d))
    return EXIT_OK


COMMANDS = {
    "check-positive": (cmd_check_positive, "test total positivity via the signed minors"),
    "check-nonnegative": (cmd_check_nonnegative, "test total nonnegativity via the Z(eps) family"),
    "identify-cell": (cmd_identify_cell, "name the positive Richardson cell of a nonnegative matrix"),
    "sample": (cmd_sample, "sample a totally positive skew matrix"),
    "sample-cell": (cmd_sample_cell, "sample a point of a given cell"),
    "pfaffians": (cmd_pfaffians, "sub-Pfaffians, sign pattern and spinor coordinates"),
    "recover-params": (cmd_recover_params, "recover the parametrization from the signed minors"),
    "lgv-export": (cmd_lgv_export, "print a path diagram in DOT format"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewtp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (func, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--matrix", help="JSON matrix file")
        p.add_argument("--n", type=int)
        p.add_argument("--t", help="comma-separated positive rationals")
        p.add_argument("--cell", help='cell label "v;w"')
        p.add_argument("--random", action="store_true", help="draw random parameters")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", choices=("text", "structured"), default="text")
        p.add_argument("--allow-large", action="store_true", help="lift size guards")
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.command in {"check-positive", "check-nonnegative", "identify-cell", "pfaffians",
                        "recover-params"} and not args.matrix:
        print("error: --matrix is required", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (cells.GuardExceeded, lgv.EnumerationTooLarge) as exc:
        print(f"error: {exc} (use --allow-large)", file=sys.stderr)
        return EXIT_INPUT
    except (ArithmeticError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

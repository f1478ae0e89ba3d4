"""Command-line front end.

Exit codes: 0 success, 1 mathematical failure (a diagnostic object is
still printed), 2 usage error.  JSON output is canonical: sorted keys,
floats at 17 significant digits, complex numbers as ``{"re", "im"}``.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import __version__
from .checks import run_sweeps
from .errors import BranchSelectionFailed, ComplexParseError, IcosolveError
from .hypergeo import choose_method, gauss_2f1
from .numeric import DEFAULT_TOLERANCES, Tolerances, format_complex, parse_complex
from .reduction import GeneralQuintic, PrincipalQuintic
from .solver import solve_general, solve_principal

SCHEMA = "icosolve/1"
TOL_ENV = "ICOSOLVE_RESIDUAL_TOL"

EXIT_OK = 0
EXIT_MATH = 1
EXIT_USAGE = 2

# Worked example: y^5 + 5i y^2 - 12 y + (1 - i), printed to 6 significant digits.
EXAMPLE_COEFFICIENTS = (1j, -2.4, 1 - 1j)
EXAMPLE_TOLERANCE = 1e-4
EXAMPLE_VALUES = (
    ("r", -0.140712 - 1.06363j),
    ("s", 0.816914 - 0.0478157j),
    ("p", 0.749812 - 0.413396j),
    ("q", 0.0671022 + 0.365581j),
    ("J", -0.324158 - 2.04659j),
    ("Y", 0.178352 + 0.0718131j),
    ("f", -0.178721 - 0.0713975j),
    ("t0", 0.509555 - 0.278001j),
    ("t1", -0.761539 + 0.997924j),
    ("t2", 0.372515 - 1.14707j),
    ("t3", 0.240993 + 1.27692j),
    ("t4", -0.361523 - 0.849771j),
    ("y0", 0.0895118 - 0.0828539j),
    ("y1", -0.0120031 + 2.20094j),
    ("y2", -0.0430531 - 1.43083j),
    ("y3", -1.90456 - 0.333135j),
    ("y4", 1.87011 - 0.354121j),
)


class UsageError(Exception):
    pass


# -- canonical JSON ---------------------------------------------------------

def _format_float(x: float) -> str:
    if not math.isfinite(x):
        return "null"
    text = "%.17g" % x
    if not any(ch in text for ch in ".en"):
        text += ".0"
    return text


def to_jsonable(value):
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value


def _encode(value) -> str:
    if value is None or isinstance(value, bool):
        return json.dumps(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _format_float(value)
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, dict):
        items = sorted(value.items())
        return "{" + ", ".join(f"{json.dumps(k)}: {_encode(v)}" for k, v in items) + "}"
    if isinstance(value, list):
        return "[" + ", ".join(_encode(v) for v in value) + "]"
    raise TypeError(f"cannot encode {type(value).__name__}")


def canonical_json(report: dict) -> str:
    """Deterministic JSON text; re-encoding its parsed form gives the same bytes."""
    return _encode(to_jsonable(report))


# -- text output ------------------------------------------------------------

def _text_value(value) -> str:
    if isinstance(value, complex):
        return format_complex(value)
    if isinstance(value, float):
        return "%.17g" % value
    return str(value)


def _text_lines(report, prefix=""):
    for key in sorted(report):
        value = report[key]
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            yield from _text_lines(value, name + ".")
        elif isinstance(value, (list, tuple)) and value and isinstance(value[0], dict):
            for i, item in enumerate(value):
                yield from _text_lines(item, f"{name}[{i}].")
        elif isinstance(value, (list, tuple)):
            for i, item in enumerate(value):
                yield f"{name}[{i}]: {_text_value(item)}"
        else:
            yield f"{name}: {_text_value(value)}"


def emit(report: dict, fmt: str, stream=None):
    stream = stream or sys.stdout
    if fmt == "json":
        print(canonical_json(report), file=stream)
    else:
        for line in _text_lines(report):
            print(line, file=stream)


# -- argument handling ------------------------------------------------------

def _complex_arg(text: str) -> complex:
    try:
        return parse_complex(text)
    except ComplexParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (value > 0 and math.isfinite(value)):
        raise argparse.ArgumentTypeError(f"tolerance must be positive and finite, got {text!r}")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--tol", type=_positive_float, default=None,
                        help=f"residual tolerance (default: ${TOL_ENV} or {DEFAULT_TOLERANCES.residual_tol})")

    parser = argparse.ArgumentParser(prog="icosolve", description="Quintic roots via the icosahedron.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", parents=[common], help="roots of y^5 + 5a y^2 + 5b y + c")
    for name in ("alpha", "beta", "gamma"):
        solve.add_argument(f"--{name}", type=_complex_arg, required=True, metavar="C")
    solve.add_argument("--intermediates", action="store_true")
    solve.add_argument("--oracle-check", action="store_true")

    general = sub.add_parser("solve-general", parents=[common], help="roots of a monic quintic")
    for name in ("c4", "c3", "c2", "c1", "c0"):
        general.add_argument(f"--{name}", type=_complex_arg, default=0j, metavar="C")
    general.add_argument("--intermediates", action="store_true")
    general.add_argument("--oracle-check", action="store_true")

    checks = sub.add_parser("check-invariants", parents=[common], help="seeded property sweeps")
    checks.add_argument("--seed", type=int, default=42)
    checks.add_argument("--points", type=_positive_int, default=200)

    hyp = sub.add_parser("eval-2f1", parents=[common], help="evaluate 2F1(a, b; c; z)")
    for name in ("a", "b", "cc", "z"):
        hyp.add_argument(f"--{name}", type=_complex_arg, required=True, metavar="C")

    sub.add_parser("example", parents=[common], help="reproduce the published worked example")
    return parser


def resolve_tolerances(args, environ=None) -> Tolerances:
    environ = os.environ if environ is None else environ
    value = args.tol
    if value is None and environ.get(TOL_ENV):
        try:
            value = _positive_float(environ[TOL_ENV])
        except argparse.ArgumentTypeError as exc:
            raise UsageError(f"{TOL_ENV}: {exc}") from None
    if value is None:
        return DEFAULT_TOLERANCES
    return Tolerances(residual_tol=value)


# -- reports ----------------------------------------------------------------

def _error_report(command, exc) -> dict:
    error = {"type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, BranchSelectionFailed):
        error["attempts"] = exc.attempts
    return {"schema": SCHEMA, "command": command, "ok": False, "error": error}


def _intermediates(result) -> dict:
    res = result.resolvent
    out = {
        "r": res.r, "s": res.s, "p": res.p, "q": res.q, "h1": res.h1, "h2": res.h2,
        "J": result.J, "Y": result.Y, "f_Y": result.f_Y,
        "t_nu": list(result.t_nu),
        "roots_by_nu": list(result.roots_by_nu),
        "branch_log": list(result.attempts),
        "loop_closure": result.loop_closure,
    }
    if result.reduction is not None:
        rec = result.reduction
        out["reduction"] = {"shift": rec.shift, "a": rec.a, "b": rec.b, "delta": rec.delta,
                            "identity": rec.identity}
        out["principal"] = {"alpha": result.principal.alpha, "beta": result.principal.beta,
                            "gamma": result.principal.gamma}
        out["principal_roots"] = list(result.principal_roots)
    if result.pre_transform is not None:
        out["pre_transform"] = result.pre_transform
    return out


def _solve_report(command, coefficients, result, args) -> dict:
    report = {
        "schema": SCHEMA,
        "command": command,
        "ok": True,
        "coefficients": coefficients,
        "roots": list(result.roots),
        "residuals": list(result.residuals),
        "max_residual": max(result.residuals),
        "J": result.J,
        "Y": result.Y,
        "branch": {"r_index": result.branch.r_index, "sqrt3rf_sign": result.branch.sqrt3rf_sign},
    }
    if args.intermediates:
        report["intermediates"] = _intermediates(result)
    if args.oracle_check:
        report["oracle_max_distance"] = result.oracle_max_distance
    return report


def cmd_solve(args, tol) -> tuple:
    coefficients = {"alpha": args.alpha, "beta": args.beta, "gamma": args.gamma}
    if all(v == 0 for v in coefficients.values()):
        raise UsageError("alpha = beta = gamma = 0 is the zero quintic y^5; nothing to solve")
    try:
        result = solve_principal(PrincipalQuintic(args.alpha, args.beta, args.gamma), tol, args.oracle_check)
    except IcosolveError as exc:
        return EXIT_MATH, _error_report("solve", exc)
    return EXIT_OK, _solve_report("solve", coefficients, result, args)


def cmd_solve_general(args, tol) -> tuple:
    names = ("c4", "c3", "c2", "c1", "c0")
    coefficients = {name: getattr(args, name) for name in names}
    if all(v == 0 for v in coefficients.values()):
        raise UsageError("all coefficients are zero: x^5 has only the root 0")
    try:
        result = solve_general(GeneralQuintic(*(coefficients[n] for n in names)), tol, args.oracle_check)
    except IcosolveError as exc:
        return EXIT_MATH, _error_report("solve-general", exc)
    return EXIT_OK, _solve_report("solve-general", coefficients, result, args)


def cmd_check_invariants(args, tol) -> tuple:
    reports = run_sweeps(args.seed, args.points, tol)
    ok = all(r.passed for r in reports)
    report = {
        "schema": SCHEMA,
        "command": "check-invariants",
        "ok": ok,
        "seed": args.seed,
        "points": args.points,
        "suites": [r.as_dict() for r in reports],
    }
    return (EXIT_OK if ok else EXIT_MATH), report


def cmd_eval_2f1(args, tol) -> tuple:
    try:
        value = gauss_2f1(args.a, args.b, args.cc, args.z, tol)
    except IcosolveError as exc:
        return EXIT_MATH, _error_report("eval-2f1", exc)
    report = {
        "schema": SCHEMA,
        "command": "eval-2f1",
        "ok": True,
        "a": args.a, "b": args.b, "c": args.cc, "z": args.z,
        "method": choose_method(args.a, args.b, args.cc, args.z),
        "value": value,
    }
    return EXIT_OK, report


def example_values(result) -> dict:
    res = result.resolvent
    computed = {"r": res.r, "s": res.s, "p": res.p, "q": res.q, "J": result.J, "Y": result.Y, "f": result.f_Y}
    computed.update({f"t{i}": t for i, t in enumerate(result.t_nu)})
    computed.update({f"y{i}": y for i, y in enumerate(result.roots_by_nu)})
    return computed


def cmd_example(args, tol) -> tuple:
    try:
        result = solve_principal(PrincipalQuintic(*EXAMPLE_COEFFICIENTS), tol)
    except IcosolveError as exc:
        return EXIT_MATH, _error_report("example", exc)
    computed = example_values(result)
    rows = []
    for name, published in EXAMPLE_VALUES:
        error = abs(computed[name] - published)
        rows.append({"name": name, "published": published, "computed": computed[name],
                     "abs_error": error, "match": error < EXAMPLE_TOLERANCE})
    ok = all(row["match"] for row in rows)
    report = {
        "schema": SCHEMA,
        "command": "example",
        "ok": ok,
        "coefficients": dict(zip(("alpha", "beta", "gamma"), EXAMPLE_COEFFICIENTS)),
        "tolerance": EXAMPLE_TOLERANCE,
        "matched": sum(row["match"] for row in rows),
        "compared": len(rows),
        "values": rows,
    }
    return (EXIT_OK if ok else EXIT_MATH), report


def _print_example_table(report, stream):
    print(f"{'':4}{'published':>28}  {'computed':>28}  error", file=stream)
    for row in report["values"]:
        mark = "ok" if row["match"] else "MISMATCH"
        print(f"{row['name']:4}{format_complex(row['published']):>28}  "
              f"{format_complex(complex(round(row['computed'].real, 7), round(row['computed'].imag, 7))):>28}  "
              f"{row['abs_error']:.2e} {mark}", file=stream)
    print(f"{report['matched']}/{report['compared']} values within {report['tolerance']:g}", file=stream)


COMMANDS = {
    "solve": cmd_solve,
    "solve-general": cmd_solve_general,
    "check-invariants": cmd_check_invariants,
    "eval-2f1": cmd_eval_2f1,
    "example": cmd_example,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        tol = resolve_tolerances(args)
        code, report = COMMANDS[args.command](args, tol)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"icosolve: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "example" and args.format == "text" and "values" in report:
        _print_example_table(report, sys.stdout)
    else:
        emit(report, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())

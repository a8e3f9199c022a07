"""``sliring`` command line: basis, solve, verify, dist, eval.

Exit codes::

    0  success
    1  verification found a failing check
    2  bad command-line usage (argparse)
    3  parse error (malformed JSON or schema violation)
    4  SLI failure (basis could not be certified)
    5  basis mismatch (operands over different bases, wrong coordinate count)
    6  no inverse (zero-core element inverted or divided by)
    7  I/O error
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, Optional

from . import serialize as ser
from .errors import BasisMismatchError, DomainError, NoInverseError, ParseError, SliError
from .fuzzy import hausdorff
from .ring import add_psi, cross_psi, crisp_element, div_psi, inv_psi, scalar_psi, sub_psi
from .sli import SliBasis, SVector, psi_realize
from .solver import solve
from .verify import run_checks, seed_from_env

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 3
EXIT_SLI = 4
EXIT_BASIS_MISMATCH = 5
EXIT_NO_INVERSE = 6
EXIT_IO = 7


def _read_json(path: str) -> Any:
    return ser.loads(Path(path).read_text(encoding="utf-8"))


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def cmd_basis(args) -> int:
    basis = ser.basis_from_dict(_read_json(args.spec), args.levels, args.threshold)
    _emit(ser.dumps(ser.basis_to_dict(basis)) + "\n", args.out)
    cert = basis.certificate
    line = f"certificate sigma_min={ser.fmt_float(cert.sigma_min)} threshold={ser.fmt_float(cert.threshold)}\n"
    (sys.stdout if args.out else sys.stderr).write(line)
    return EXIT_OK


def cmd_solve(args) -> int:
    eq = ser.problem_from_dict(_read_json(args.problem), args.levels, args.threshold)
    sol = solve(eq)
    if args.format == "csv":
        rep = sol.representative
        text = ser.to_csv(psi_realize(rep)) if rep is not None else "alpha,lower,upper\n"
    else:
        text = ser.dumps(ser.solution_to_dict(sol, with_levels=not args.no_levels)) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    eq = ser.problem_from_dict(_read_json(args.problem), args.levels, args.threshold)
    claimed = None
    if args.solution is not None:
        claimed = ser.solution_coords_from_dict(_read_json(args.solution))
    seed = args.seed if args.seed is not None else seed_from_env()
    checks = run_checks(eq, claimed, seed=seed, samples=args.samples)
    if args.format == "json":
        text = ser.dumps(
            {
                "seed": seed,
                "passed": all(c.passed for c in checks),
                "checks": [
                    {"name": c.name, "status": c.status, "value": c.value, "tol": c.tol, "detail": c.detail}
                    for c in checks
                ],
            }
        ) + "\n"
    elif args.format == "csv":
        rows = ["check,status,value,tol"]
        rows += [
            f"{c.name},{c.status},{'' if c.value is None else ser.fmt_float(c.value)},{ser.fmt_float(c.tol)}"
            for c in checks
        ]
        text = "\n".join(rows) + "\n"
    else:
        width = max(len(c.name) for c in checks)
        lines = []
        for c in checks:
            value = "-" if c.value is None else f"{c.value:.3e}"
            lines.append(f"{c.name:<{width}}  {c.status}  value={value}  tol={c.tol:.0e}  {c.detail}".rstrip())
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK if all(c.passed for c in checks) else EXIT_CHECK_FAILED


def cmd_dist(args) -> int:
    F = ser.fuzzy_from_dict(_read_json(args.first), args.levels)
    G = ser.fuzzy_from_dict(_read_json(args.second), args.levels)
    sys.stdout.write(f"{hausdorff(F, G):.12g}\n")
    return EXIT_OK


_BINARY = {"add": add_psi, "sub": sub_psi, "cross": cross_psi, "div": div_psi}


def evaluate_expr(node: Any, basis: SliBasis, env: dict[str, SVector]) -> SVector:
    """Evaluate a prefix expression ``[op, arg, ...]``.

    Leaves are ``{"coords": [...]}`` objects, names bound in ``env``, or plain
    numbers (crisp constants). ``smul`` takes a number first.
    """
    if isinstance(node, bool):
        raise ParseError("expr: booleans are not operands")
    if isinstance(node, (int, float)):
        return crisp_element(basis, float(node))
    if isinstance(node, str):
        if node not in env:
            raise ParseError(f"expr: unknown name {node!r}")
        return env[node]
    if isinstance(node, dict):
        return ser.svector_from_dict(node, basis, "expr operand")
    if not isinstance(node, list) or not node or not isinstance(node[0], str):
        raise ParseError("expr: expected [op, args...]")
    op, rest = node[0], node[1:]
    if op in _BINARY:
        if len(rest) != 2:
            raise ParseError(f"expr: {op} takes 2 operands")
        return _BINARY[op](evaluate_expr(rest[0], basis, env), evaluate_expr(rest[1], basis, env))
    if op == "inv":
        if len(rest) != 1:
            raise ParseError("expr: inv takes 1 operand")
        return inv_psi(evaluate_expr(rest[0], basis, env))
    if op == "smul":
        if len(rest) != 2 or isinstance(rest[0], bool) or not isinstance(rest[0], (int, float)):
            raise ParseError("expr: smul takes a number and an operand")
        return scalar_psi(float(rest[0]), evaluate_expr(rest[1], basis, env))
    raise ParseError(f"expr: unknown operation {op!r}")


def cmd_eval(args) -> int:
    doc = _read_json(args.file)
    basis = ser.basis_from_dict(ser._require(doc, "basis", "eval"), args.levels, args.threshold)
    env_doc = doc.get("vars", {})
    if not isinstance(env_doc, dict):
        raise ParseError("eval.vars: expected an object")
    env = {name: ser.svector_from_dict(v, basis, f"vars.{name}") for name, v in env_doc.items()}
    result = evaluate_expr(ser._require(doc, "expr", "eval"), basis, env)
    if args.format == "csv":
        text = ser.to_csv(psi_realize(result))
    else:
        payload = ser.svector_to_dict(result)
        payload["levels"] = ser.cut_rows(psi_realize(result))
        text = ser.dumps(payload) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sliring", description="Arithmetic and linear equations over SLI bases of fuzzy numbers."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("json", "csv"), default="json"):
        p.add_argument("--levels", type=int, default=None, help="grid size (default: file value or 101)")
        p.add_argument(
            "--threshold", type=float, default=None, help="relative SLI threshold (default: file value or 1e-8)"
        )
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--out", default=None, help="output path (default: stdout)")

    p = sub.add_parser("basis", help="build and certify a basis")
    p.add_argument("spec")
    common(p, formats=("json",))
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("solve", help="solve A (.) X + B = C")
    p.add_argument("problem")
    p.add_argument("--no-levels", action="store_true", help="omit the alpha-cut table from JSON output")
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="cross-check a problem and its solution")
    p.add_argument("problem")
    p.add_argument("--solution", default=None, help="solution file to check instead of re-solving")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=None, help="overrides $SLI_RING_SEED")
    common(p, formats=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dist", help="Hausdorff distance between two fuzzy numbers")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--levels", type=int, default=101, help="grid size for trapezoid shorthand")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("eval", help="evaluate a prefix expression of ring operations")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_eval)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        code, msg = EXIT_PARSE, f"parse error: {exc}"
    except SliError as exc:
        code, msg = EXIT_SLI, f"SLI failure: {exc}"
    except BasisMismatchError as exc:
        code, msg = EXIT_BASIS_MISMATCH, f"basis mismatch: {exc}"
    except NoInverseError as exc:
        code, msg = EXIT_NO_INVERSE, f"no inverse: {exc}"
    except DomainError as exc:
        code, msg = EXIT_PARSE, f"invalid input: {exc}"
    except OSError as exc:
        code, msg = EXIT_IO, f"I/O error: {exc}"
    sys.stderr.write(f"sliring: {msg}\n")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

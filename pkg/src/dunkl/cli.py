"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 expression parse error,
3 precondition violation (bad mode/prime, non-member input, and so on).
Command-line usage errors are reported by argparse itself.  All numeric
output is exact; there is no floating point anywhere in the engine.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .lattices import SYMBOLIC, DunklMode, NonIntegralValues
from .membership import equivalence_report
from .operators import (
    ModeMismatch,
    NotInDP,
    NotPolynomialPreserving,
    Operator,
    WordEvaluationError,
    basis_enumerate,
    decompose_in_basis,
    delta_basis,
    dp_membership,
    e_plus,
    from_word,
    graded_dimension,
    operator_divisor,
    reduce_mod_p,
    x_op,
)
from .poly import action_poly_text, coef_poly_text
from .serialize import (
    coef_poly_to_json,
    laurent_to_json,
    mode_to_json,
    operator_to_json,
    witness_to_json,
)
from .sl2 import bracket, build_triple, casimir, casimir_scalar, sigma
from .words import ParseError, parse


class PreconditionError(ValueError):
    pass


def _parse_mode(text: str) -> DunklMode:
    if text == "symbolic":
        return SYMBOLIC
    try:
        return DunklMode.numeric(int(text))
    except ValueError:
        raise PreconditionError(f"--c must be 'symbolic' or an integer, got {text!r}")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _read_expression(text: str) -> str:
    if text == "-":
        return sys.stdin.read()
    return text


def _operator_lines(q: Operator) -> list[str]:
    if q.is_zero:
        return ["0"]
    out = []
    for n in q.degrees:
        piece = q.pieces[n]
        out.append(
            f"degree {n}: even {action_poly_text(piece.f_plus)}"
            f" | odd {action_poly_text(piece.f_minus)}"
        )
    return out


def _laurent_text(image) -> str:
    if not image:
        return "0"
    parts = []
    for exponent in sorted(image):
        coeff = coef_poly_text(image[exponent])
        if exponent == 0:
            parts.append(f"({coeff})")
        else:
            parts.append(f"({coeff})*x^{exponent}")
    return " + ".join(parts)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--c",
        default="symbolic",
        help="base ring: 'symbolic' for Z[c] or an integer value (default: symbolic)",
    )
    common.add_argument("--max-degree", type=int, default=12)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--prime", type=int, default=None, help="prime for mod-p tables")

    parser = argparse.ArgumentParser(
        prog="dunkl",
        description="Exact engine for the rank-one Dunkl operator algebra "
        "and its divided powers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "normalize", parents=[common], help="print the normal form of an expression"
    )
    p.add_argument("expression")

    p = sub.add_parser(
        "act", parents=[common], help="print images of x^k over a range of exponents"
    )
    p.add_argument("expression")
    p.add_argument("--kmin", type=int, default=0)
    p.add_argument("--kmax", type=int, default=None)

    p = sub.add_parser(
        "divisor", parents=[common], help="largest integer dividing the operator"
    )
    p.add_argument("expression")

    p = sub.add_parser(
        "member", parents=[common], help="divided power membership witness or refusal"
    )
    p.add_argument("expression")

    p = sub.add_parser("basis", parents=[common], help="list divided power basis elements")
    p.add_argument("--sign", choices=("+", "-", "both"), default="both")

    p = sub.add_parser(
        "decompose", parents=[common], help="coordinates in the divided power basis"
    )
    p.add_argument("expression")

    sub.add_parser("hilbert", parents=[common], help="graded dimensions versus 2(m+1)")

    sub.add_parser(
        "sl2", parents=[common], help="the sl2 triple, Casimir scalar and Sigma table"
    )

    p = sub.add_parser(
        "abstract", parents=[common], help="compare membership tests per parameter value"
    )
    p.add_argument("--c-values", default="0,1,-1")
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--degree-bound", type=int, default=5)

    sub.add_parser("verify", parents=[common], help="run the full invariant suite")
    return parser


def _execute(args) -> tuple[dict, list[str], int]:
    mode = _parse_mode(args.c)
    if args.max_degree < 0:
        raise PreconditionError("--max-degree must be nonnegative")
    if args.prime is not None and not _is_prime(args.prime):
        raise PreconditionError(f"--prime needs a prime number, got {args.prime}")
    envelope = {"command": args.command, "mode": mode_to_json(mode)}

    if args.command == "normalize":
        q = from_word(parse(_read_expression(args.expression)), mode)
        envelope["result"] = operator_to_json(q)
        return envelope, _operator_lines(q), 0

    if args.command == "act":
        q = from_word(parse(_read_expression(args.expression)), mode)
        kmax = args.kmax if args.kmax is not None else args.max_degree
        if args.prime is not None:
            if mode.is_symbolic:
                raise PreconditionError("mod-p tables need --c <integer>")
            table = reduce_mod_p(q, args.prime, kmax)
            rows = [
                {
                    "exponent": k,
                    "image": [
                        {"exponent": e, "residue": r} for e, r in sorted(row.items())
                    ],
                }
                for k, row in enumerate(table)
            ]
            envelope["result"] = {"prime": args.prime, "rows": rows}
            lines = [
                f"x^{k} -> "
                + (
                    " + ".join(f"{r}*x^{e}" for e, r in sorted(row.items()))
                    if row
                    else "0"
                )
                + f"   (mod {args.prime})"
                for k, row in enumerate(table)
            ]
            return envelope, lines, 0
        rows = []
        lines = []
        for k in range(args.kmin, kmax + 1):
            image = q.act(k)
            rows.append({"exponent": k, "image": laurent_to_json(image)})
            lines.append(f"x^{k} -> {_laurent_text(image)}")
        envelope["result"] = rows
        return envelope, lines, 0

    if args.command == "divisor":
        q = from_word(parse(_read_expression(args.expression)), mode)
        value = operator_divisor(q)
        envelope["result"] = {"divisor": value}
        return envelope, [str(value)], 0

    if args.command == "member":
        q = from_word(parse(_read_expression(args.expression)), mode)
        witness, reason = dp_membership(q)
        if witness is None:
            envelope["result"] = {"member": False, "reason": reason}
            return envelope, [f"refusal: {reason}"], 0
        envelope["result"] = {"member": True, **witness_to_json(witness)}
        lines = [f"member with denominator {witness.denominator}"]
        lines += ["numerator:"] + ["  " + t for t in _operator_lines(witness.numerator)]
        return envelope, lines, 0

    if args.command == "basis":
        signs = ("+", "-") if args.sign == "both" else (args.sign,)
        result = []
        lines = []
        for sign in signs:
            for element in basis_enumerate(sign, args.max_degree, mode):
                result.append(
                    {
                        "label": element.label,
                        "total_degree": element.total_degree,
                        "operator": operator_to_json(element.operator),
                    }
                )
                lines.append(f"{element.label}  (total degree {element.total_degree})")
        envelope["result"] = result
        return envelope, lines, 0

    if args.command == "decompose":
        q = from_word(parse(_read_expression(args.expression)), mode)
        coords = decompose_in_basis(q)
        result = [
            {"label": label, "coefficient": coef_poly_to_json(coords[label])}
            for label in sorted(coords)
        ]
        envelope["result"] = result
        lines = [f"{label}: {coef_poly_text(coords[label])}" for label in sorted(coords)]
        return envelope, lines or ["0"], 0

    if args.command == "hilbert":
        rows = [
            {"degree": m, "dimension": graded_dimension(m), "expected": 2 * (m + 1)}
            for m in range(args.max_degree + 1)
        ]
        envelope["result"] = rows
        lines = [str(row["dimension"]) for row in rows]
        return envelope, [",".join(lines)], 0

    if args.command == "sl2":
        triple = build_triple(mode)
        brackets_hold = (
            bracket(triple.H, triple.E) == triple.E.scale(2)
            and bracket(triple.H, triple.F) == triple.F.scale(-2)
            and bracket(triple.E, triple.F) == triple.H
        )
        scalar = casimir_scalar(mode)
        casimir_is_scalar = casimir(mode) == e_plus(mode).scale(scalar)
        table = []
        bound = min(args.max_degree, 3)
        for n in range(bound + 1):
            for k in range(bound + 1 - n):
                table.append(
                    {
                        "a": 0,
                        "b": n,
                        "k": k,
                        "label": f"Delta+[{2 * n},{k}]",
                        "matches": sigma(0, n, k, mode) == delta_basis("+", 2 * n, k, mode),
                    }
                )
                table.append(
                    {
                        "a": n + 1,
                        "b": 0,
                        "k": k,
                        "label": f"x^{2 * n + 2}*Delta+[0,{k}]",
                        "matches": sigma(n + 1, 0, k, mode)
                        == x_op(mode) ** (2 * n + 2) * delta_basis("+", 0, k, mode),
                    }
                )
        envelope["result"] = {
            "E": operator_to_json(triple.E),
            "H": operator_to_json(triple.H),
            "F": operator_to_json(triple.F),
            "brackets_hold": brackets_hold,
            "casimir_scalar": coef_poly_to_json(scalar),
            "casimir_is_scalar": casimir_is_scalar,
            "sigma_table": table,
        }
        lines = ["E:"] + ["  " + t for t in _operator_lines(triple.E)]
        lines += ["H:"] + ["  " + t for t in _operator_lines(triple.H)]
        lines += ["F:"] + ["  " + t for t in _operator_lines(triple.F)]
        lines.append(f"brackets hold: {brackets_hold}")
        lines.append(f"casimir scalar: {coef_poly_text(scalar)}")
        lines.append(f"casimir is that scalar on the even module: {casimir_is_scalar}")
        lines += [
            f"Sigma[{row['a']},{row['b']},{row['k']}] == {row['label']}: {row['matches']}"
            for row in table
        ]
        return envelope, lines, 0

    if args.command == "abstract":
        try:
            c_values = [Fraction(v) for v in args.c_values.split(",") if v.strip()]
        except ValueError:
            raise PreconditionError(f"bad --c-values: {args.c_values!r}")
        report = equivalence_report(
            c_values, degree_bound=args.degree_bound, sample_count=args.samples
        )
        envelope["result"] = report
        lines = [
            f"c={row['c']}: {row['operator']}: in_dp={row['in_dp']} "
            f"in_Hc={row['in_Hc']} agree={row['agree']}"
            for row in report["rows"]
        ]
        lines.append(f"integer-c disagreements: {report['integer_disagreements']}")
        return envelope, lines, 0

    if args.command == "verify":
        from .verification import run_all

        passed, failed, rows = run_all()
        envelope["result"] = {"passed": passed, "failed": failed, "checks": rows}
        lines = [
            f"{'PASS' if row['ok'] else 'FAIL'} {row['name']}"
            + (f"  [{row['detail']}]" if row.get("detail") else "")
            for row in rows
        ]
        lines.append(f"{passed} passed, {failed} failed")
        return envelope, lines, 0 if failed == 0 else 1

    raise PreconditionError(f"unknown command {args.command!r}")


def run_for_json(argv: list[str]) -> dict:
    """Execute a command and return the JSON envelope (used by the test suite)."""
    args = build_parser().parse_args(argv)
    envelope, _, code = _execute(args)
    if code not in (0, 1):
        raise RuntimeError(f"command failed with {code}")
    return envelope


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        envelope, lines, code = _execute(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (
        PreconditionError,
        NotInDP,
        NotPolynomialPreserving,
        WordEvaluationError,
        NonIntegralValues,
        ModeMismatch,
    ) as exc:
        print(f"precondition violation: {exc}", file=sys.stderr)
        return 3
    if args.format == "json":
        print(json.dumps(envelope, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Exact JSON encodings for engine values.

Scalars are encoded as strings (``"7"`` or ``"-7/3"``) so nothing is ever
rounded; polynomials are dense coefficient arrays, ``c``-degree inside
``t``-degree.  The shipped schema (``schemas/output.schema.json``) describes
every shape the CLI can emit.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

from .lattices import DunklMode, IntLattice
from .operators import DpWitness, Operator
from .poly import ActionPoly, CoefPoly, scalar_text, to_newton
from .weyl import WeylOp


def scalar_to_json(value: Fraction) -> str:
    return scalar_text(value)


def coef_poly_to_json(p: CoefPoly) -> list[str]:
    return [scalar_text(p.coeff(d)) for d in range(p.degree + 1)]


def action_poly_to_json(p: ActionPoly) -> list[list[str]]:
    return [coef_poly_to_json(p.coeff(d)) for d in range(p.degree + 1)]


def mode_to_json(mode: DunklMode) -> str:
    return "symbolic" if mode.is_symbolic else scalar_text(mode.c_value)


def operator_to_json(q: Operator) -> dict:
    return {
        "mode": mode_to_json(q.mode),
        "parity": "split",
        "pieces": [
            {
                "degree": n,
                "f_plus": action_poly_to_json(q.pieces[n].f_plus),
                "f_minus": action_poly_to_json(q.pieces[n].f_minus),
            }
            for n in sorted(q.pieces)
        ],
    }


def weyl_to_json(w: WeylOp) -> dict:
    return {
        "mode": "symbolic",
        "parity": "none",
        "pieces": [
            {"degree": n, "f": action_poly_to_json(p)}
            for n, p in sorted(w.pieces.items())
        ],
    }


def witness_to_json(witness: DpWitness) -> dict:
    return {
        "denominator": witness.denominator,
        "numerator": operator_to_json(witness.numerator),
    }


def lattice_to_json(lattice: IntLattice) -> dict:
    return {
        "parity": lattice.parity,
        "degree": lattice.degree,
        "mode": mode_to_json(lattice.mode),
        "truncation": lattice.truncation,
        "generators": [
            {
                "poly": action_poly_to_json(g),
                "newton": [coef_poly_to_json(a) for a in to_newton(g)],
            }
            for g in lattice.generators
        ],
    }


def laurent_to_json(image: dict[int, CoefPoly]) -> list[dict]:
    return [
        {"exponent": k, "coefficient": coef_poly_to_json(image[k])}
        for k in sorted(image)
    ]


def schema() -> dict:
    """The published output schema, loaded from package data."""
    text = resources.files("dunkl").joinpath("schemas/output.schema.json").read_text()
    return json.loads(text)

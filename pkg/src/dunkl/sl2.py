"""The sl2 triple inside the spherical subalgebra and its divided powers.

The even diagonal corner of the engine carries an sl2 triple built from
``x^2``, the squared Dunkl operator and the Euler operator; its Casimir acts
by a scalar, and rewriting the explicit divided power basis through the
triple yields a divided power structure on the corresponding quotient of the
enveloping algebra.  The third index of the Sigma operators is called ``k``
here: the traditional name collides with the deformation parameter ``c``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .lattices import SYMBOLIC, DunklMode, m_delta
from .operators import (
    Operator,
    basis_labels,
    basis_element,
    compose,
    d_op,
    delta_basis,
    e_plus,
    x_op,
)
from .poly import CoefPoly


@dataclass(frozen=True)
class Sl2Triple:
    """Operators ``E``, ``H``, ``F`` satisfying the three bracket relations."""

    E: Operator
    H: Operator
    F: Operator


def _half_one_minus_two_c() -> CoefPoly:
    return CoefPoly({0: Fraction(1, 2), 1: -1})


def build_triple(mode: DunklMode = SYMBOLIC) -> Sl2Triple:
    """``E = -x^2 e+/2``, ``H = (xD + (1-2c)/2) e+``, ``F = D^2 e+ / 2``."""
    ep = e_plus(mode)
    x = x_op(mode)
    d = d_op(mode)
    e = (x * x * ep).scale(Fraction(-1, 2))
    h = (x * d + Operator.scalar(mode, _half_one_minus_two_c())) * ep
    f = (d * d * ep).scale(Fraction(1, 2))
    return Sl2Triple(e, h, f)


def bracket(a: Operator, b: Operator) -> Operator:
    return compose(a, b) - compose(b, a)


def casimir(mode: DunklMode = SYMBOLIC) -> Operator:
    """``E F + F E + H^2/2``; acts on the even module by a scalar."""
    triple = build_triple(mode)
    e, h, f = triple.E, triple.H, triple.F
    return e * f + f * e + (h * h).scale(Fraction(1, 2))


def casimir_scalar(mode: DunklMode = SYMBOLIC) -> CoefPoly:
    """The central character value ``-(1-2c)(3+2c)/8``."""
    one_minus = CoefPoly({0: 1, 1: -2})
    three_plus = CoefPoly({0: 3, 1: 2})
    scalar = (one_minus * three_plus) * Fraction(-1, 8)
    if not mode.is_symbolic:
        scalar = CoefPoly(scalar.eval(mode.c_value))
    return scalar


def sigma(a: int, b: int, k: int, mode: DunklMode = SYMBOLIC) -> Operator:
    """Divided power basis operator of the spherical algebra via the triple.

    ``(-2E)^a (2F)^b prod_{i<k}(H - (1-2c)/2 - 2(i + m)) / (2^{m+k} (m+k)!)``
    with ``m = m_delta(1, 2b)``; the unit of the spherical corner is the even
    projector, so scalars and empty products are taken against it.
    """
    if min(a, b, k) < 0:
        raise ValueError("indices must be nonnegative")
    ep = e_plus(mode)
    triple = build_triple(mode)
    m = m_delta(1, 2 * b)
    minus_two_e = triple.E.scale(-2)
    two_f = triple.F.scale(2)
    # H - (1-2c)/2 restricted to the spherical corner
    h_shift = triple.H - ep.scale(_half_one_minus_two_c())
    acc = ep
    for i in range(k):
        acc = (h_shift - ep.scale(2 * (i + m))) * acc
    acc = two_f**b * acc
    acc = minus_two_e**a * acc
    return acc.scale(Fraction(1, 2 ** (m + k) * factorial(m + k)))


def spherical_basis(max_total_degree: int, mode: DunklMode = SYMBOLIC):
    """Basis of the even corner: plus-sign elements of even piece degree.

    Every element is fixed by sandwiching with the even projector.
    """
    out = []
    for label, degree in basis_labels("+", max_total_degree):
        op = basis_element(label, mode)
        if all(n % 2 == 0 for n in op.pieces):
            out.append((label, degree, op))
    return out

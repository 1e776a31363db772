"""The integral Weyl algebra factor and its divided power extension.

Operators here have no parity split: the degree-``n`` piece acts by
``x^t -> f(t) x^{t+n}`` with the full exponent as the polynomial variable.
The divided power extension is spanned by ``x^k`` times Hasse derivatives,
and the tensor-factor divisibility checks against the Dunkl side operate on
outer products of action-value tables, so the second tensor variable is never
materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Optional

from .lattices import DunklMode, divisor_of_values
from .poly import ActionPoly, CoefPoly, binomial_poly, to_newton

_PLAIN = DunklMode.numeric(0)  # Weyl data never mentions c; any numeric ring works


class WeylOp:
    """Finite sum of graded pieces ``degree -> action polynomial``."""

    __slots__ = ("_pieces",)

    def __init__(self, pieces: Mapping[int, ActionPoly] | Iterable[tuple[int, ActionPoly]] = ()):
        if isinstance(pieces, Mapping):
            pieces = pieces.items()
        data: dict[int, ActionPoly] = {}
        for degree, poly in pieces:
            poly = poly if isinstance(poly, ActionPoly) else ActionPoly(poly)
            if poly:
                if degree in data:
                    raise ValueError("duplicate piece degree")
                data[degree] = poly
        self._pieces = data

    @property
    def pieces(self) -> dict[int, ActionPoly]:
        return dict(self._pieces)

    @property
    def is_zero(self) -> bool:
        return not self._pieces

    def piece_at(self, degree: int) -> ActionPoly:
        return self._pieces.get(degree, ActionPoly(0))

    def __eq__(self, other):
        if not isinstance(other, WeylOp):
            return NotImplemented
        return self._pieces == other._pieces

    def __repr__(self):
        if self.is_zero:
            return "<WeylOp 0>"
        parts = [f"deg {n}: {p}" for n, p in sorted(self._pieces.items())]
        return f"<WeylOp {'; '.join(parts)}>"

    def __add__(self, other):
        if not isinstance(other, WeylOp):
            return NotImplemented
        degrees = set(self._pieces) | set(other._pieces)
        return WeylOp({n: self.piece_at(n) + other.piece_at(n) for n in degrees})

    def __sub__(self, other):
        if not isinstance(other, WeylOp):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return WeylOp({n: -p for n, p in self._pieces.items()})

    def scale(self, value) -> "WeylOp":
        return WeylOp({n: p * value for n, p in self._pieces.items()})

    def __mul__(self, other):
        if isinstance(other, WeylOp):
            return weyl_compose(self, other)
        if isinstance(other, (int, Fraction, CoefPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CoefPoly)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers are not defined here")
        out = identity_weyl()
        for _ in range(exponent):
            out = weyl_compose(out, self)
        return out

    def act(self, exponent: int) -> dict[int, CoefPoly]:
        out: dict[int, CoefPoly] = {}
        for n, p in self._pieces.items():
            value = p.eval(exponent)
            if value:
                out[exponent + n] = out.get(exponent + n, CoefPoly(0)) + value
        return {k: v for k, v in out.items() if v}


def identity_weyl() -> WeylOp:
    return WeylOp({0: ActionPoly(1)})


def x_weyl(power: int = 1) -> WeylOp:
    return WeylOp({power: ActionPoly(1)})


def partial_weyl() -> WeylOp:
    """The plain derivative ``x^t -> t x^{t-1}``."""
    return WeylOp({-1: ActionPoly({1: 1})})


def hasse(k: int) -> WeylOp:
    """The divided ``k``-th derivative: ``x^t -> C(t, k) x^{t-k}``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return WeylOp({-k: binomial_poly(k)})


def weyl_compose(a: WeylOp, b: WeylOp) -> WeylOp:
    """Composition in normal form: ``a`` after ``b``."""
    acc: dict[int, ActionPoly] = {}
    for m, pb in b.pieces.items():
        for n, pa in a.pieces.items():
            d = m + n
            acc[d] = acc.get(d, ActionPoly(0)) + pb * pa.shift(m)
    return WeylOp(acc)


def weyl_divisor(w: WeylOp) -> int:
    """Largest integer dividing every action value on ``x^t``, ``t >= 0``."""
    out = 0
    for p in w.pieces.values():
        out = gcd(out, divisor_of_values(p, _PLAIN))
    return out


def weyl_dp_basis(max_total_degree: int) -> list[tuple[str, WeylOp]]:
    """All ``x^k`` times Hasse derivatives with ``k + l`` up to the bound."""
    if max_total_degree < 0:
        raise ValueError("max_total_degree must be nonnegative")
    out = []
    for total in range(max_total_degree + 1):
        for l in range(total + 1):
            k = total - l
            label = _basis_label(k, l)
            out.append((label, weyl_compose(x_weyl(k), hasse(l))))
    return out


def _basis_label(k: int, l: int) -> str:
    parts = []
    if k:
        parts.append(f"x^{k}" if k > 1 else "x")
    if l:
        parts.append(f"H^{l}" if l > 1 else "H")
    return "*".join(parts) if parts else "1"


def decompose_weyl(w: WeylOp) -> Optional[dict[str, Fraction]]:
    """Coordinates in the ``x^k H^l`` basis, or None for Laurent leakage.

    The degree-``d`` piece with Newton coordinates ``a_j`` is
    ``sum_j a_j x^{d+j} H^j``; every ``d + j`` with a nonzero coordinate must
    be nonnegative for the operator to live in the basis span.
    """
    out: dict[str, Fraction] = {}
    for d, p in w.pieces.items():
        for j, alpha in enumerate(to_newton(p)):
            if not alpha:
                continue
            if d + j < 0:
                return None
            out[_basis_label(d + j, j)] = alpha.as_fraction()
    return out


# -- tensor-factor divisibility --------------------------------------------------


def _dunkl_value_contents(op, table_size: int) -> list[int]:
    """Integer contents of all action coefficients of a Dunkl-side operator."""
    out = []
    for k in range(table_size + 1):
        for coeff in op.act(k).values():
            out.append(coeff.integer_content())
    return out


def _weyl_value_contents(w: WeylOp, table_size: int) -> list[int]:
    out = []
    for m in range(table_size + 1):
        for coeff in w.act(m).values():
            out.append(coeff.integer_content())
    return out


def tensor_divisor_check(a, b: WeylOp, d: int, table_size: int = 20) -> bool:
    """Truth of: ``d`` divides ``a (x) b``  implies  ``d | a`` and ``d | b``.

    Divisibility is read off gcds of the action-value tables on the product
    monomials ``x^k (x) q^m`` for ``0 <= k, m <= table_size``; the product
    table's coefficients are exactly the pairwise products of the two factor
    tables, so the outer product is never materialized.
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    contents_a = _dunkl_value_contents(a, table_size)
    contents_b = _weyl_value_contents(b, table_size)
    div_a = 0
    for v in contents_a:
        div_a = gcd(div_a, v)
    div_b = 0
    for v in contents_b:
        div_b = gcd(div_b, v)
    div_ab = 0
    for va in contents_a:
        for vb in contents_b:
            div_ab = gcd(div_ab, va * vb)
        if div_ab == 1:
            break
    hypothesis = div_ab % d == 0
    conclusion = div_a % d == 0 and div_b % d == 0
    return (not hypothesis) or conclusion


def base_ring_units_are_pm_one(mode: DunklMode) -> bool:
    """The tensor theorem needs the base ring's units to meet Z in {1, -1}.

    Both supported base rings qualify: the units of Z and of Z[c] are exactly
    {1, -1}, so the check is a constant for this engine.
    """
    return True

"""Normal-form engine for the rank-one Dunkl operator algebra.

An operator is a finite sum of graded pieces.  The piece of degree ``n``
stores two action polynomials: ``f_plus`` describes the action on even
monomials (``x^{2t} -> f_plus(t) x^{2t+n}``) and ``f_minus`` the action on
odd monomials (``x^{2t+1} -> f_minus(t) x^{2t+1+n}``).  Two operators are
equal exactly when their normal forms coincide, which by construction happens
exactly when their actions agree on every Laurent monomial.

The engine deliberately lives in the endomorphisms of the Laurent module, so
Laurent-legal operators such as ``x^-1 * e-`` are first-class citizens;
"preserves the polynomial module" is a predicate, not a representation
constraint.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd
from typing import Iterable, Mapping, Optional

from . import words
from .lattices import (
    SYMBOLIC,
    DunklMode,
    divisor_of_values,
    dunkl_poly,
    l_poly,
    m_delta,
)
from .poly import ActionPoly, CoefPoly, binomial_poly, to_newton


class ModeMismatch(ValueError):
    """Two operators from different base rings were combined."""


class NotPolynomialPreserving(ValueError):
    """The operation needs an operator that fixes the polynomial module."""


class NotInDP(ValueError):
    """The operation needs a certified divided-power member."""


class NonIntegralCoefficients(ArithmeticError):
    """A decomposition that must have base-ring coefficients did not.

    For certified divided-power members this signals a bug, not bad input.
    """


class WordEvaluationError(ValueError):
    """A well-formed word could not be evaluated into an operator."""


@dataclass(frozen=True)
class GradedOp:
    """One homogeneous piece: degree plus the two parity action polynomials."""

    degree: int
    f_plus: ActionPoly
    f_minus: ActionPoly

    @property
    def is_zero(self) -> bool:
        return self.f_plus.is_zero and self.f_minus.is_zero


class Operator:
    """Finite formal sum of graded pieces in canonical form."""

    __slots__ = ("mode", "_pieces")

    def __init__(self, mode: DunklMode, pieces: Iterable[GradedOp] = ()):
        if isinstance(pieces, Mapping):
            pieces = pieces.values()
        data: dict[int, GradedOp] = {}
        for piece in pieces:
            if piece.is_zero:
                continue
            if piece.degree in data:
                raise ValueError("duplicate piece degree")
            data[piece.degree] = piece
        self.mode = mode
        self._pieces = data

    # -- construction -------------------------------------------------------

    @staticmethod
    def _coerce_poly(mode: DunklMode, f) -> ActionPoly:
        f = f if isinstance(f, ActionPoly) else ActionPoly(f)
        return mode.specialize(f)

    @classmethod
    def piece(cls, mode: DunklMode, degree: int, f_plus, f_minus) -> "Operator":
        return cls(
            mode,
            [
                GradedOp(
                    degree,
                    cls._coerce_poly(mode, f_plus),
                    cls._coerce_poly(mode, f_minus),
                )
            ],
        )

    @classmethod
    def zero(cls, mode: DunklMode) -> "Operator":
        return cls(mode)

    @classmethod
    def identity(cls, mode: DunklMode) -> "Operator":
        return cls.piece(mode, 0, 1, 1)

    @classmethod
    def scalar(cls, mode: DunklMode, value) -> "Operator":
        value = value if isinstance(value, CoefPoly) else CoefPoly(value)
        return cls.piece(mode, 0, ActionPoly(value), ActionPoly(value))

    # -- inspection ---------------------------------------------------------

    @property
    def pieces(self) -> dict[int, GradedOp]:
        return dict(self._pieces)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted(self._pieces))

    @property
    def is_zero(self) -> bool:
        return not self._pieces

    def piece_at(self, degree: int) -> GradedOp:
        zero = ActionPoly(0)
        return self._pieces.get(degree, GradedOp(degree, zero, zero))

    def max_poly_degree(self) -> int:
        out = -1
        for p in self._pieces.values():
            out = max(out, p.f_plus.degree, p.f_minus.degree)
        return out

    def __eq__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        return self.mode == other.mode and self._pieces == other._pieces

    def __repr__(self):
        if self.is_zero:
            return f"<Operator 0 ({self.mode})>"
        parts = []
        for n in self.degrees:
            p = self._pieces[n]
            parts.append(f"deg {n}: even {p.f_plus} | odd {p.f_minus}")
        return f"<Operator {'; '.join(parts)} ({self.mode})>"

    # -- linear structure -----------------------------------------------------

    def _check_mode(self, other: "Operator"):
        if self.mode != other.mode:
            raise ModeMismatch(f"cannot mix {self.mode} with {other.mode}")

    def __add__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        self._check_mode(other)
        degrees = set(self._pieces) | set(other._pieces)
        out = []
        for n in degrees:
            a = self.piece_at(n)
            b = other.piece_at(n)
            out.append(GradedOp(n, a.f_plus + b.f_plus, a.f_minus + b.f_minus))
        return Operator(self.mode, out)

    def __sub__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Operator(
            self.mode,
            [GradedOp(p.degree, -p.f_plus, -p.f_minus) for p in self._pieces.values()],
        )

    def scale(self, value) -> "Operator":
        value = value if isinstance(value, CoefPoly) else CoefPoly(value)
        if not self.mode.is_symbolic:
            value = CoefPoly(value.eval(self.mode.c_value))
        return Operator(
            self.mode,
            [
                GradedOp(p.degree, p.f_plus * value, p.f_minus * value)
                for p in self._pieces.values()
            ],
        )

    def __mul__(self, other):
        if isinstance(other, Operator):
            return compose(self, other)
        if isinstance(other, (int, Fraction, CoefPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CoefPoly)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int):
        if exponent < 0:
            base = self._invert()
            exponent = -exponent
        else:
            base = self
        out = Operator.identity(self.mode)
        for _ in range(exponent):
            out = compose(out, base)
        return out

    def _invert(self) -> "Operator":
        """Inverse of a single-piece operator with constant rational actions."""
        if len(self._pieces) != 1:
            raise WordEvaluationError("only monomial-like operators are invertible")
        ((n, p),) = self._pieces.items()
        fp, fm = p.f_plus, p.f_minus
        if not (
            fp.degree <= 0
            and fm.degree <= 0
            and fp.leading().is_constant
            and fm.leading().is_constant
        ):
            raise WordEvaluationError("only monomial-like operators are invertible")
        a = fp.coeff(0).as_fraction() if not fp.is_zero else Fraction(0)
        b = fm.coeff(0).as_fraction() if not fm.is_zero else Fraction(0)
        if a == 0 or b == 0:
            raise WordEvaluationError("operator kills one parity class; not invertible")
        if n % 2 == 0:
            return Operator.piece(self.mode, -n, Fraction(1, 1) / a, Fraction(1, 1) / b)
        return Operator.piece(self.mode, -n, Fraction(1, 1) / b, Fraction(1, 1) / a)

    # -- action ---------------------------------------------------------------

    def act(self, exponent: int) -> dict[int, CoefPoly]:
        """Image of ``x^exponent`` as a map target exponent -> coefficient."""
        parity = exponent % 2
        t = (exponent - parity) // 2
        out: dict[int, CoefPoly] = {}
        for n, p in self._pieces.items():
            f = p.f_minus if parity else p.f_plus
            value = f.eval(t)
            if value:
                target = exponent + n
                prev = out.get(target)
                total = value if prev is None else prev + value
                if total:
                    out[target] = total
                elif prev is not None:
                    del out[target]
        return out

    def act_on(self, laurent: Mapping[int, CoefPoly]) -> dict[int, CoefPoly]:
        """Apply to a Laurent polynomial given as exponent -> coefficient."""
        out: dict[int, CoefPoly] = {}
        for exponent, coeff in laurent.items():
            for target, value in self.act(exponent).items():
                total = out.get(target, CoefPoly(0)) + coeff * value
                if total:
                    out[target] = total
                elif target in out:
                    del out[target]
        return out


def compose(a: Operator, b: Operator) -> Operator:
    """Operator composition: ``compose(a, b)`` acts as ``a`` after ``b``.

    The parity of the intermediate exponent is decided by ``b``'s piece
    degree, which selects the branch of ``a`` and the shift of its argument.
    """
    if a.mode != b.mode:
        raise ModeMismatch(f"cannot compose {a.mode} with {b.mode}")
    acc: dict[int, list[ActionPoly]] = {}
    for m, pb in b.pieces.items():
        for n, pa in a.pieces.items():
            d = m + n
            slot = acc.setdefault(d, [ActionPoly(0), ActionPoly(0)])
            if m % 2 == 0:
                shift = m // 2
                if pb.f_plus and pa.f_plus:
                    slot[0] = slot[0] + pb.f_plus * pa.f_plus.shift(shift)
                if pb.f_minus and pa.f_minus:
                    slot[1] = slot[1] + pb.f_minus * pa.f_minus.shift(shift)
            else:
                if pb.f_plus and pa.f_minus:
                    slot[0] = slot[0] + pb.f_plus * pa.f_minus.shift((m - 1) // 2)
                if pb.f_minus and pa.f_plus:
                    slot[1] = slot[1] + pb.f_minus * pa.f_plus.shift((m + 1) // 2)
    return Operator(
        a.mode, [GradedOp(d, fp, fm) for d, (fp, fm) in acc.items()]
    )


# -- generators ----------------------------------------------------------------


def x_op(mode: DunklMode = SYMBOLIC) -> Operator:
    return Operator.piece(mode, 1, 1, 1)


def x_inv(mode: DunklMode = SYMBOLIC) -> Operator:
    return Operator.piece(mode, -1, 1, 1)


def d_op(mode: DunklMode = SYMBOLIC) -> Operator:
    """The Dunkl operator: derivative minus ``(2c/x)`` times the odd projector."""
    f_plus = ActionPoly({1: 2})
    f_minus = ActionPoly({1: 2, 0: CoefPoly({0: 1, 1: -2})})
    return Operator.piece(mode, -1, f_plus, f_minus)


def partial_op(mode: DunklMode = SYMBOLIC) -> Operator:
    """The plain derivative (no reflection correction)."""
    return Operator.piece(mode, -1, ActionPoly({1: 2}), ActionPoly({1: 2, 0: 1}))


def e_plus(mode: DunklMode = SYMBOLIC) -> Operator:
    return Operator.piece(mode, 0, 1, 0)


def e_minus(mode: DunklMode = SYMBOLIC) -> Operator:
    return Operator.piece(mode, 0, 0, 1)


def s_op(mode: DunklMode = SYMBOLIC) -> Operator:
    return Operator.piece(mode, 0, 1, -1)


_GENERATORS = {
    "x": x_op,
    "D": d_op,
    "e+": e_plus,
    "e-": e_minus,
    "s": s_op,
}


def from_word(word: words.Word, mode: DunklMode = SYMBOLIC) -> Operator:
    """Evaluate a formal word into a normal-form operator."""
    if isinstance(word, words.Lit):
        return Operator.scalar(mode, word.value)
    if isinstance(word, words.Sym):
        if word.name == "c":
            return Operator.scalar(mode, CoefPoly({1: 1}))
        if word.name == "t":
            raise WordEvaluationError("'t' is a polynomial variable, not an operator")
        return _GENERATORS[word.name](mode)
    if isinstance(word, words.Neg):
        return -from_word(word.operand, mode)
    if isinstance(word, words.Add):
        return from_word(word.left, mode) + from_word(word.right, mode)
    if isinstance(word, words.Sub):
        return from_word(word.left, mode) - from_word(word.right, mode)
    if isinstance(word, words.Mul):
        return from_word(word.left, mode) * from_word(word.right, mode)
    if isinstance(word, words.Pow):
        return from_word(word.base, mode) ** word.exponent
    raise TypeError(f"not a word: {word!r}")


def from_text(source: str, mode: DunklMode = SYMBOLIC) -> Operator:
    return from_word(words.parse(source), mode)


def grade_decompose(q: Operator) -> dict[int, GradedOp]:
    """The graded pieces; their sum is the operator."""
    return q.pieces


# -- polynomial preservation and divisors ---------------------------------------


def _preservation_defect(q: Operator) -> Optional[str]:
    """Why ``q`` fails to fix the polynomial module, or None if it does fix it.

    Exact check from finitely many evaluations: a piece's action polynomial
    has finite degree, so base-ring values on ``t = 0..deg`` force base-ring
    values everywhere, and the finitely many exponents that would land below
    ``x^0`` must evaluate to zero.
    """
    for n in sorted(q.pieces):
        p = q.pieces[n]
        for parity, f in ((0, p.f_plus), (1, p.f_minus)):
            if f.is_zero:
                continue
            t = 0
            while 2 * t + parity + n < 0:
                if f.eval(t):
                    return (
                        f"maps x^{2 * t + parity} below x^0 "
                        f"(degree {n} piece, value {f.eval(t)})"
                    )
                t += 1
            for i in range(f.degree + 1):
                value = f.eval(t + i)
                if not value.is_integral:
                    return f"non-integral value at exponent {2 * (t + i) + parity}"
    return None


def preserves_polynomials(q: Operator) -> bool:
    """True when the operator maps the polynomial module into itself."""
    return _preservation_defect(q) is None


def operator_divisor(q: Operator) -> int:
    """Largest integer ``d`` with ``q/d`` still fixing the polynomial module.

    Per-piece, per-parity gcd of :func:`divisor_of_values`; 0 for the zero
    operator.
    """
    defect = _preservation_defect(q)
    if defect is not None:
        raise NotPolynomialPreserving(defect)
    out = 0
    for p in q.pieces.values():
        for f in (p.f_plus, p.f_minus):
            if f.is_zero:
                continue
            out = gcd(out, divisor_of_values(f, q.mode))
    return out


# -- divided power membership -----------------------------------------------------


@dataclass(frozen=True)
class DpWitness:
    """Certificate ``numerator / denominator`` for divided power membership.

    The numerator's graded pieces carry base-ring data in the canonical
    generating sets of the un-divided algebra, and ``numerator`` scaled by
    ``1/denominator`` reproduces the certified operator exactly.
    """

    denominator: int
    numerator: Operator


def _dunkl_divisor_poly(mode: DunklMode, parity: str, k: int) -> ActionPoly:
    return mode.specialize(dunkl_poly(parity, k))


def dp_membership(q: Operator):
    """Witness for membership in the divided power extension, or a refusal.

    Returns ``(witness, None)`` on success and ``(None, reason)`` otherwise.
    Membership needs the operator to fix the polynomial module and, for each
    piece of negative degree ``n``, the action polynomials to be divisible by
    the corresponding Dunkl product polynomials of order ``-n``; the witness
    denominator is the least common denominator of the quotients' coordinates
    in powers of ``2t``, which makes the witness canonical.
    """
    defect = _preservation_defect(q)
    if defect is not None:
        return None, f"does not preserve polynomials: {defect}"
    denominator = 1
    for n in sorted(q.pieces):
        p = q.pieces[n]
        for parity_sign, f in (("+", p.f_plus), ("-", p.f_minus)):
            if f.is_zero:
                continue
            if n < 0:
                divisor = _dunkl_divisor_poly(q.mode, parity_sign, -n)
                quotient = f.divexact(divisor)
                if quotient is None:
                    return None, (
                        f"degree {n} piece ({parity_sign} part) is not divisible "
                        f"by the order-{-n} Dunkl product polynomial"
                    )
            else:
                quotient = f
            for coord in quotient.two_t_coordinates():
                d = coord.denominator_lcm()
                denominator = denominator * d // gcd(denominator, d)
    witness = DpWitness(denominator, q.scale(denominator))
    return witness, None


def in_dp(q: Operator) -> Optional[DpWitness]:
    """Divided power membership test (see :func:`dp_membership`)."""
    witness, _ = dp_membership(q)
    return witness


# -- the explicit divided power basis ----------------------------------------------


@lru_cache(maxsize=None)
def delta_numerator(sign: str, k1: int, k2: int, mode: DunklMode = SYMBOLIC):
    """Un-divided numerator of a basis element and its exact denominator."""
    if sign == "+":
        m = m_delta(1, k1)
        proj = e_plus(mode)
        offset = lambda i: CoefPoly(-2 * (i + m))  # noqa: E731
    elif sign == "-":
        m = m_delta(0, k1)
        proj = e_minus(mode)
        offset = lambda i: CoefPoly({0: -1 - 2 * (i + m), 1: 2})  # noqa: E731
    else:
        raise ValueError("sign must be '+' or '-'")
    xd = x_op(mode) * d_op(mode)
    word = proj
    for i in range(k2):
        word = (xd + Operator.scalar(mode, offset(i))) * word
    word = d_op(mode) ** k1 * word
    return word, 2 ** (m + k2) * factorial(m + k2)


def delta_basis(sign: str, k1: int, k2: int, mode: DunklMode = SYMBOLIC) -> Operator:
    """Divided power basis element with indices ``(k1, k2)`` on one sign."""
    numerator, denominator = delta_numerator(sign, k1, k2, mode)
    return numerator.scale(Fraction(1, denominator))


@dataclass(frozen=True)
class BasisElement:
    label: str
    total_degree: int
    operator: Operator


def _delta_label(sign: str, k1: int, k2: int) -> str:
    return f"Delta{sign}[{k1},{k2}]"


def _shift_label(sign: str, power: int, k: int) -> str:
    return f"x^{power}*Delta{sign}[0,{k}]"


def basis_labels(sign: str, max_total_degree: int) -> list[tuple[str, int]]:
    """Labels and total degrees, without building the operators."""
    out = []
    for degree in range(max_total_degree + 1):
        for k2 in range(degree // 2 + 1):
            out.append((_delta_label(sign, degree - 2 * k2, k2), degree))
        for k in range((degree - 1) // 2 + 1):
            out.append((_shift_label(sign, degree - 2 * k, k), degree))
    return out


@lru_cache(maxsize=None)
def _basis_enumerate_cached(sign, max_total_degree, mode) -> tuple[BasisElement, ...]:
    out = []
    for label, degree in basis_labels(sign, max_total_degree):
        out.append(BasisElement(label, degree, basis_element(label, mode)))
    return tuple(out)


def basis_enumerate(
    sign: str, max_total_degree: int, mode: DunklMode = SYMBOLIC
) -> list[BasisElement]:
    """All basis elements of total degree up to the bound, labeled.

    Total degree is ``k1 + 2 k2`` for the pure elements and ``n + 1 + 2 k``
    for the shifted ones, matching the filtration by monomial degree.
    """
    if max_total_degree < 0:
        raise ValueError("max_total_degree must be nonnegative")
    return list(_basis_enumerate_cached(sign, max_total_degree, mode))


def basis_element(label: str, mode: DunklMode = SYMBOLIC) -> Operator:
    """Build a basis element from its label."""
    body = label
    power = 0
    if body.startswith("x^"):
        head, body = body.split("*", 1)
        power = int(head[2:])
    if not body.startswith("Delta"):
        raise ValueError(f"not a basis label: {label!r}")
    sign = body[5]
    k1, k2 = (int(v) for v in body[7:-1].split(","))
    op = delta_basis(sign, k1, k2, mode)
    if power:
        op = x_op(mode) ** power * op
    return op


def graded_dimension(total_degree: int) -> int:
    """Number of basis labels of exactly this total degree (both signs)."""
    if total_degree < 0:
        raise ValueError("total_degree must be nonnegative")
    count = 0
    for sign in "+-":
        count += sum(
            1 for _, d in basis_labels(sign, total_degree) if d == total_degree
        )
    return count


def decompose_in_basis(q: Operator) -> dict[str, CoefPoly]:
    """Coordinates of a certified member in the explicit basis.

    Works piece by piece: the basis elements hitting a fixed degree and
    parity have action polynomials of strictly increasing ``t``-degree, so a
    triangular solve on leading coefficients recovers the coordinates; they
    must land in the base ring.
    """
    if not q.mode.is_symbolic:
        raise NotInDP("decomposition is defined over the symbolic base ring")
    witness, reason = dp_membership(q)
    if witness is None:
        raise NotInDP(reason)
    out: dict[str, CoefPoly] = {}
    for n in sorted(q.pieces):
        p = q.pieces[n]
        for parity_sign, f in (("+", p.f_plus), ("-", p.f_minus)):
            if f.is_zero:
                continue
            if n < 0:
                delta = 1 if parity_sign == "+" else 0
                shift = m_delta(delta, -n)
                cofactor = l_poly(parity_sign, -n)
                rem = f
                while not rem.is_zero:
                    k = rem.degree + n
                    if k < 0:
                        raise NonIntegralCoefficients(
                            f"degree {n} piece not in the basis span"
                        )
                    gen = cofactor * binomial_poly(k + shift)
                    ratio = rem.leading() * (
                        Fraction(1) / gen.leading().as_fraction()
                    )
                    out[_delta_label(parity_sign, -n, k)] = ratio
                    rem = rem - gen * ratio
            else:
                for k, alpha in enumerate(to_newton(f)):
                    if not alpha:
                        continue
                    if n == 0:
                        label = _delta_label(parity_sign, 0, k)
                    else:
                        label = _shift_label(parity_sign, n, k)
                    out[label] = alpha
    for label, value in out.items():
        if not value.is_integral:
            raise NonIntegralCoefficients(
                f"coefficient of {label} is {value}, outside the base ring"
            )
    return out


# -- mod-p action tables ------------------------------------------------------------


def reduce_mod_p(q: Operator, p: int, max_exponent: int) -> list[dict[int, int]]:
    """Action table of a certified member modulo a prime.

    Entry ``k`` maps target exponents to residues of the coefficients of the
    image of ``x^k``, reduced into ``0..p-1``.
    """
    if q.mode.is_symbolic:
        raise NotInDP("mod-p tables need a numeric parameter value")
    witness, reason = dp_membership(q)
    if witness is None:
        raise NotInDP(reason)
    table = []
    for k in range(max_exponent + 1):
        row = {}
        for target, coeff in q.act(k).items():
            value = coeff.as_fraction()
            if value.denominator != 1:
                raise NonIntegralCoefficients(
                    f"certified member produced {value} at exponent {k}"
                )
            residue = value.numerator % p
            if residue:
                row[target] = residue
        table.append(row)
    return table


# -- order filtration ----------------------------------------------------------------


def operator_order(q: Operator) -> int:
    """Differential-operator order: the maximal action-polynomial degree.

    ``-1`` for the zero operator.  Multiplication-type operators (constant
    action polynomials on both parities) have order 0; each bracket with the
    multiplication-by-``x`` operator lowers the order of reflection-free
    operators by at least one.
    """
    return q.max_poly_degree()

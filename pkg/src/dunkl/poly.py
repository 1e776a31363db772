"""Exact scalars and the bivariate polynomial tower behind the operator engine.

Three layers of exact data are used everywhere downstream:

* scalars: arbitrary-precision rationals (``fractions.Fraction``),
* :class:`CoefPoly`: polynomials in the deformation parameter ``c`` with
  rational coefficients,
* :class:`ActionPoly`: polynomials in the grading variable ``t`` whose
  coefficients are ``CoefPoly`` values.

The binomial polynomials ``C(t, k) = t(t-1)...(t-k+1)/k!`` and the conversion
between monomial and Newton (forward-difference) coordinates also live here;
the whole integrality story downstream runs through Newton coordinates.

All values are immutable after construction and every operation is a pure
function, so everything in this module is safe to share between threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, gcd
from typing import Iterable, Mapping, Union

# The engine's scalar type is the stdlib exact rational, kept in canonical
# reduced form by Fraction itself (gcd(num, den) = 1, den > 0).
ExactScalar = Fraction

ScalarLike = Union[Fraction, int]


class NonIntegralInput(ValueError):
    """An operation required integer data but met a proper fraction."""


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact integer or Fraction, got {type(value).__name__}")


def scalar_text(value: Fraction) -> str:
    """Render a rational exactly, ``7`` or ``-7/3``."""
    value = _frac(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class CoefPoly:
    """A polynomial in the parameter ``c`` over the rationals.

    Stored sparsely by degree with no zero coefficients, so structural
    equality is semantic equality.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Union[Mapping[int, ScalarLike], ScalarLike, "CoefPoly"] = 0):
        if isinstance(coeffs, CoefPoly):
            self._coeffs = dict(coeffs._coeffs)
            return
        data: dict[int, Fraction] = {}
        if isinstance(coeffs, Mapping):
            for deg, val in coeffs.items():
                deg = int(deg)
                if deg < 0:
                    raise ValueError("negative c-degree")
                val = _frac(val)
                if val:
                    data[deg] = val
        else:
            val = _frac(coeffs)
            if val:
                data[0] = val
        self._coeffs = data

    # -- basics ----------------------------------------------------------

    def items(self) -> tuple[tuple[int, Fraction], ...]:
        return tuple(sorted(self._coeffs.items()))

    def coeff(self, degree: int) -> Fraction:
        return self._coeffs.get(degree, Fraction(0))

    @property
    def degree(self) -> int:
        """Degree in ``c``; the zero polynomial has degree -1."""
        return max(self._coeffs, default=-1)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    @property
    def is_constant(self) -> bool:
        return self.degree <= 0

    def as_fraction(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"not a constant: {self}")
        return self.coeff(0)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = _coerce_coef(other)
        if other is NotImplemented:
            return NotImplemented
        data = dict(self._coeffs)
        for deg, val in other._coeffs.items():
            data[deg] = data.get(deg, Fraction(0)) + val
        return CoefPoly(data)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_coef(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_coef(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return CoefPoly({d: -v for d, v in self._coeffs.items()})

    def __mul__(self, other):
        other = _coerce_coef(other)
        if other is NotImplemented:
            return NotImplemented
        data: dict[int, Fraction] = {}
        for d1, v1 in self._coeffs.items():
            for d2, v2 in other._coeffs.items():
                d = d1 + d2
                data[d] = data.get(d, Fraction(0)) + v1 * v2
        return CoefPoly(data)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        out = CoefPoly(1)
        for _ in range(exponent):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CoefPoly(other)
        if not isinstance(other, CoefPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self.items())

    # -- evaluation and integrality ---------------------------------------

    def eval(self, c_value: ScalarLike) -> Fraction:
        c_value = _frac(c_value)
        return sum((v * c_value**d for d, v in self._coeffs.items()), Fraction(0))

    @property
    def is_integral(self) -> bool:
        """True when every coefficient is an integer."""
        return all(v.denominator == 1 for v in self._coeffs.values())

    def integer_content(self) -> int:
        """gcd of the integer coefficients; 0 for the zero polynomial."""
        if not self.is_integral:
            raise NonIntegralInput(f"non-integral coefficients in {self}")
        out = 0
        for v in self._coeffs.values():
            out = gcd(out, abs(v.numerator))
        return out

    def denominator_lcm(self) -> int:
        out = 1
        for v in self._coeffs.values():
            out = out * v.denominator // gcd(out, v.denominator)
        return out

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        return coef_poly_text(self)

    __repr__ = __str__


def _coerce_coef(value):
    if isinstance(value, CoefPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return CoefPoly(value)
    return NotImplemented


class ActionPoly:
    """A polynomial in the grading variable ``t`` with ``CoefPoly`` coefficients.

    These represent graded operator actions: the degree-``n`` piece of an
    operator sends a monomial with half-exponent ``t`` to ``f(t)`` times the
    shifted monomial.  Stored sparsely with no zero coefficients.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=0):
        if isinstance(coeffs, ActionPoly):
            self._coeffs = dict(coeffs._coeffs)
            return
        data: dict[int, CoefPoly] = {}
        if isinstance(coeffs, Mapping):
            for deg, val in coeffs.items():
                deg = int(deg)
                if deg < 0:
                    raise ValueError("negative t-degree")
                val = val if isinstance(val, CoefPoly) else CoefPoly(val)
                if val:
                    data[deg] = val
        else:
            val = coeffs if isinstance(coeffs, CoefPoly) else CoefPoly(coeffs)
            if val:
                data[0] = val
        self._coeffs = data

    # -- basics ----------------------------------------------------------

    def items(self) -> tuple[tuple[int, CoefPoly], ...]:
        return tuple(sorted(self._coeffs.items()))

    def coeff(self, degree: int) -> CoefPoly:
        return self._coeffs.get(degree, CoefPoly(0))

    @property
    def degree(self) -> int:
        """Degree in ``t``; the zero polynomial has degree -1."""
        return max(self._coeffs, default=-1)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def leading(self) -> CoefPoly:
        if self.is_zero:
            return CoefPoly(0)
        return self._coeffs[self.degree]

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = _coerce_action(other)
        if other is NotImplemented:
            return NotImplemented
        data = dict(self._coeffs)
        for deg, val in other._coeffs.items():
            data[deg] = data.get(deg, CoefPoly(0)) + val
        return ActionPoly(data)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_action(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_action(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return ActionPoly({d: -v for d, v in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CoefPoly)):
            scalar = other if isinstance(other, CoefPoly) else CoefPoly(other)
            return ActionPoly({d: v * scalar for d, v in self._coeffs.items()})
        if not isinstance(other, ActionPoly):
            return NotImplemented
        data: dict[int, CoefPoly] = {}
        for d1, v1 in self._coeffs.items():
            for d2, v2 in other._coeffs.items():
                d = d1 + d2
                data[d] = data.get(d, CoefPoly(0)) + v1 * v2
        return ActionPoly(data)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        out = ActionPoly(1)
        for _ in range(exponent):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CoefPoly)):
            other = ActionPoly(other)
        if not isinstance(other, ActionPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self.items())

    # -- evaluation and substitution ---------------------------------------

    def eval(self, t_value: ScalarLike) -> CoefPoly:
        """Value at a rational ``t``; the result still depends on ``c``."""
        t_value = _frac(t_value)
        out = CoefPoly(0)
        for deg, val in self._coeffs.items():
            out = out + val * t_value**deg
        return out

    def eval_coef(self, argument: CoefPoly) -> CoefPoly:
        """Value at a ``t`` that is itself a polynomial in ``c`` (Horner)."""
        out = CoefPoly(0)
        for deg in range(self.degree, -1, -1):
            out = out * argument + self.coeff(deg)
        return out

    def shift(self, offset: int) -> "ActionPoly":
        """The polynomial ``t -> f(t + offset)``, expanded exactly."""
        if offset == 0 or self.is_zero:
            return self
        step = ActionPoly({1: 1, 0: offset})
        out = ActionPoly(0)
        power = ActionPoly(1)
        for deg in range(0, self.degree + 1):
            val = self._coeffs.get(deg)
            if val is not None:
                out = out + power * val
            power = power * step
        return out

    def derivative(self) -> "ActionPoly":
        return ActionPoly({d - 1: v * d for d, v in self._coeffs.items() if d >= 1})

    def substitute_c(self, c_value: ScalarLike) -> "ActionPoly":
        return ActionPoly({d: v.eval(c_value) for d, v in self._coeffs.items()})

    # -- integrality -------------------------------------------------------

    @property
    def is_integral(self) -> bool:
        return all(v.is_integral for v in self._coeffs.values())

    def denominator_lcm(self) -> int:
        out = 1
        for v in self._coeffs.values():
            d = v.denominator_lcm()
            out = out * d // gcd(out, d)
        return out

    def two_t_coordinates(self) -> list[CoefPoly]:
        """Coefficients with respect to powers of ``2t``, index = power."""
        return [self.coeff(d) * Fraction(1, 2**d) for d in range(self.degree + 1)]

    def divexact(self, divisor: "ActionPoly"):
        """Exact quotient by ``divisor``, or ``None`` if division leaves a remainder.

        The divisor's leading coefficient must be a nonzero rational constant
        (true for every divisor the engine uses), so the quotient never picks
        up denominators in ``c``.
        """
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        lead = divisor.leading()
        if not lead.is_constant:
            raise ValueError("divisor leading coefficient must be constant in c")
        inv_lead = Fraction(1) / lead.as_fraction()
        quotient = ActionPoly(0)
        rem = self
        while not rem.is_zero and rem.degree >= divisor.degree:
            shift = rem.degree - divisor.degree
            term = ActionPoly({shift: rem.leading() * inv_lead})
            quotient = quotient + term
            rem = rem - term * divisor
        return quotient if rem.is_zero else None

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        return action_poly_text(self)

    __repr__ = __str__


def _coerce_action(value):
    if isinstance(value, ActionPoly):
        return value
    if isinstance(value, (int, Fraction, CoefPoly)):
        return ActionPoly(value)
    return NotImplemented


# -- constructors -----------------------------------------------------------


def c_poly() -> CoefPoly:
    """The parameter ``c`` as a polynomial."""
    return CoefPoly({1: 1})


def t_poly() -> ActionPoly:
    """The grading variable ``t`` as a polynomial."""
    return ActionPoly({1: 1})


def binomial_poly(k: int) -> ActionPoly:
    """The binomial polynomial ``C(t, k)``, degree ``k``, leading ``1/k!``."""
    if k < 0:
        raise ValueError("binomial index must be nonnegative")
    prod = falling_product([ActionPoly({1: 1, 0: -i}) for i in range(k)])
    return prod * Fraction(1, factorial(k))


def falling_product(factors: Iterable[ActionPoly]) -> ActionPoly:
    """Expanded product of affine-in-``t`` factors; the empty product is 1."""
    out = ActionPoly(1)
    for f in factors:
        if f.degree > 1:
            raise ValueError("factors must be affine in t")
        out = out * f
    return out


# -- Newton coordinates -------------------------------------------------------


def to_newton(f: ActionPoly) -> list[CoefPoly]:
    """Newton coordinates ``(a_0, ..., a_N)`` with ``f = sum a_k C(t, k)``.

    Computed from the values ``f(0), ..., f(N)`` by iterated forward
    differences; ``N = deg f`` values determine every coordinate, so no
    evaluation beyond ``N`` is needed.  The zero polynomial gives ``[]``.
    """
    n = f.degree
    if n < 0:
        return []
    values = [f.eval(i) for i in range(n + 1)]
    coords = []
    for _ in range(n + 1):
        coords.append(values[0])
        values = [values[i + 1] - values[i] for i in range(len(values) - 1)]
    return coords


def from_newton(coords: Iterable[CoefPoly]) -> ActionPoly:
    """Inverse of :func:`to_newton`: the sum of ``a_k C(t, k)``."""
    out = ActionPoly(0)
    for k, val in enumerate(coords):
        if not isinstance(val, CoefPoly):
            val = CoefPoly(val)
        if val:
            out = out + binomial_poly(k) * val
    return out


def integer_content(f: ActionPoly) -> int:
    """gcd of every integer coefficient appearing anywhere in ``f``; 0 for 0."""
    out = 0
    for _, val in f.items():
        out = gcd(out, val.integer_content())
    return out


def pascal_matrix(size: int) -> list[list[int]]:
    """Lower-triangular Pascal matrix ``L[i][j] = C(i, j)``, 0 <= i, j < size."""
    from math import comb

    return [[comb(i, j) for j in range(size)] for i in range(size)]


# -- text rendering -----------------------------------------------------------
#
# The textual forms below are exactly the grammar the CLI parses, so printing
# then parsing is lossless.


def _monomial_text(coefficient: Fraction, symbol: str, degree: int) -> str:
    if degree == 0:
        return scalar_text(coefficient)
    body = symbol if degree == 1 else f"{symbol}^{degree}"
    if coefficient == 1:
        return body
    if coefficient == -1:
        return f"-{body}"
    return f"{scalar_text(coefficient)}*{body}"


def _join_terms(terms: list[str]) -> str:
    if not terms:
        return "0"
    out = terms[0]
    for term in terms[1:]:
        if term.startswith("-"):
            out += " - " + term[1:]
        else:
            out += " + " + term
    return out


def coef_poly_text(p: CoefPoly) -> str:
    terms = [
        _monomial_text(val, "c", deg) for deg, val in sorted(p.items(), reverse=True)
    ]
    return _join_terms(terms)


def action_poly_text(p: ActionPoly) -> str:
    terms = []
    for deg, val in sorted(p.items(), reverse=True):
        if deg == 0:
            text = coef_poly_text(val)
            if len(val.items()) > 1 and text.startswith("-"):
                # keep the join sign unambiguous for things like "-1 + 2*c"
                text = f"({text})"
        elif val.is_constant:
            text = _monomial_text(val.as_fraction(), "t", deg)
        elif len(val.items()) == 1:
            ((cdeg, scalar),) = val.items()
            body = _monomial_text(scalar, "c", cdeg)
            tpart = "t" if deg == 1 else f"t^{deg}"
            text = f"{body}*{tpart}"
        else:
            tpart = "t" if deg == 1 else f"t^{deg}"
            text = f"({coef_poly_text(val)})*{tpart}"
        terms.append(text)
    return _join_terms(terms)

"""Integer-valued polynomial lattices attached to the Dunkl action.

The degree-``n`` graded slices of the divided power extension are lattices of
polynomials taking base-ring values on the nonnegative integers.  This module
computes the divisor of such a polynomial, the product polynomials describing
iterated Dunkl actions and their binomial factorizations, and bases of the
value lattices both symbolically (base ring Z[c]) and numerically (base ring
Z with the parameter fixed), the latter through exact integer lattice
saturation in Newton coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .poly import (
    ActionPoly,
    CoefPoly,
    binomial_poly,
    falling_product,
    from_newton,
    to_newton,
)


class NonIntegralValues(ValueError):
    """A polynomial expected to take base-ring values failed to."""


@dataclass(frozen=True)
class DunklMode:
    """Base ring selector: symbolic ``Z[c]`` or numeric ``Z`` with ``c`` fixed.

    ``c_value is None`` means symbolic.  Numeric values are exact rationals;
    the lattice machinery additionally requires an integer value and raises
    :class:`NonIntegralValues` otherwise.
    """

    c_value: Optional[Fraction] = None

    @classmethod
    def numeric(cls, c_value) -> "DunklMode":
        return cls(Fraction(c_value))

    @property
    def is_symbolic(self) -> bool:
        return self.c_value is None

    def specialize(self, f: ActionPoly) -> ActionPoly:
        return f if self.is_symbolic else f.substitute_c(self.c_value)

    def __str__(self) -> str:
        if self.is_symbolic:
            return "symbolic"
        return f"c={self.c_value.numerator}" + (
            f"/{self.c_value.denominator}" if self.c_value.denominator != 1 else ""
        )


SYMBOLIC = DunklMode()


def m_delta(delta: int, k: int) -> int:
    """``floor((k + delta)/2)`` for ``delta`` in {0, 1}."""
    if delta not in (0, 1):
        raise ValueError("delta must be 0 or 1")
    if k < 0:
        raise ValueError("k must be nonnegative")
    return (k + delta) // 2


def _parity_indicator(i: int) -> int:
    return i % 2


def dunkl_poly(parity: str, k: int) -> ActionPoly:
    """Product polynomial of ``k`` successive Dunkl steps on one parity class.

    ``dunkl_poly('+', k)`` is ``prod_{i<k} (2t - i - 2c p_i)`` and
    ``dunkl_poly('-', k)`` is ``prod_{i<k} (2t + 1 - i - 2c p_{i+1})``, where
    ``p_i`` is 1 for odd ``i`` and 0 otherwise.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    factors = []
    two_c = CoefPoly({1: 2})
    for i in range(k):
        if parity == "+":
            const = CoefPoly(-i) - two_c * _parity_indicator(i)
        elif parity == "-":
            const = CoefPoly(1 - i) - two_c * _parity_indicator(i + 1)
        else:
            raise ValueError("parity must be '+' or '-'")
        factors.append(ActionPoly({1: 2, 0: const}))
    if parity not in ("+", "-"):
        raise ValueError("parity must be '+' or '-'")
    return falling_product(factors)


def l_poly(parity: str, k: int) -> ActionPoly:
    """Primitive cofactor of :func:`dunkl_poly` after splitting off a binomial.

    Satisfies ``dunkl_poly('+', k) = 2^m1 m1! * l_poly('+', k) * C(t, m1)``
    with ``m1 = m_delta(1, k)``, and the mirror identity with ``m0`` on the
    minus side.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    two_c = CoefPoly({1: 2})
    if parity == "+":
        count = m_delta(0, k)
        factors = [
            ActionPoly({1: 2, 0: CoefPoly(-2 * i - 1) - two_c}) for i in range(count)
        ]
    elif parity == "-":
        count = m_delta(1, k)
        factors = [
            ActionPoly({1: 2, 0: CoefPoly(-2 * i + 1) - two_c}) for i in range(count)
        ]
    else:
        raise ValueError("parity must be '+' or '-'")
    return falling_product(factors)


def divisor_of_values(f: ActionPoly, mode: DunklMode) -> int:
    """Largest positive integer dividing ``f(n)`` for every integer ``n >= 0``.

    Equals the gcd of the integer contents of the Newton coordinates (of
    their absolute values in numeric mode); 0 for the zero polynomial.
    Raises :class:`NonIntegralValues` when some value ``f(n)`` is not in the
    base ring.
    """
    f = mode.specialize(f)
    for n in range(f.degree + 1):
        if not f.eval(n).is_integral:
            raise NonIntegralValues(f"value at t={n} is {f.eval(n)}, not in the base ring")
    out = 0
    for alpha in to_newton(f):
        out = gcd(out, alpha.integer_content())
    return out


# -- integer matrices: Hermite form, kernels, saturation ----------------------


def _row_hnf(rows: Sequence[Sequence[int]]):
    """Row Hermite normal form with transform: returns ``(H, U, rank)``.

    ``U`` is unimodular with ``U A = H``; ``H`` is in echelon form with
    positive pivots and the entries above each pivot reduced into
    ``[0, pivot)``.  Zero rows sit at the bottom.
    """
    a = [[int(x) for x in row] for row in rows]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    u = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if a[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            a[r], a[pivot] = a[pivot], a[r]
            u[r], u[pivot] = u[pivot], u[r]
        for i in range(r + 1, nrows):
            while a[i][col]:
                q = a[r][col] // a[i][col]
                for j in range(ncols):
                    a[r][j] -= q * a[i][j]
                for j in range(nrows):
                    u[r][j] -= q * u[i][j]
                a[r], a[i] = a[i], a[r]
                u[r], u[i] = u[i], u[r]
        if a[r][col] < 0:
            a[r] = [-x for x in a[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = a[i][col] // a[r][col]
            if q:
                for j in range(ncols):
                    a[i][j] -= q * a[r][j]
                for j in range(nrows):
                    u[i][j] -= q * u[r][j]
        r += 1
    return a, u, r


def _kernel_rows(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis of ``{x : x A = 0}`` over the integers (row left-kernel)."""
    h, u, rank = _row_hnf(rows)
    return [u[i] for i in range(rank, len(rows))]


def _transpose(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    return [list(col) for col in zip(*rows)]


def saturate(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis of ``span_Q(rows) intersect Z^m`` in Hermite normal form.

    Every input row is an integer combination of the output rows and the
    output rows lie in the rational span of the input, so the output is the
    saturation of the input lattice.
    """
    if not rows:
        raise ValueError("rows must be nonempty")
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise ValueError("ragged matrix")
    h, _, rank = _row_hnf(rows)
    if rank == 0:
        return []
    if rank == ncols:
        return [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    basis = h[:rank]
    # Right-kernel of the basis (columns y with B y = 0), found as the row
    # kernel of the transpose; the saturation is everything orthogonal to it.
    kernel = _kernel_rows(_transpose(basis))
    sat = _kernel_rows(_transpose(kernel))
    h2, _, rank2 = _row_hnf(sat)
    return h2[:rank2]


def lattice_member(rows: Sequence[Sequence[int]], candidate: Sequence[int]) -> bool:
    """Whether an integer vector lies in the integer row span of ``rows``."""
    h1, _, r1 = _row_hnf(rows)
    h2, _, r2 = _row_hnf(list(list(r) for r in rows) + [list(candidate)])
    return r1 == r2 and h1[:r1] == h2[:r2]


def _degree_triangular(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Re-reduce a lattice basis so generators have distinct, increasing degree.

    Works on Newton-coordinate vectors: reversing the column order makes the
    leading (highest-index) coordinate the pivot, so the Hermite form there is
    triangular in the polynomial degree.
    """
    if not rows:
        return []
    reversed_rows = [list(reversed(r)) for r in rows]
    h, _, rank = _row_hnf(reversed_rows)
    out = [list(reversed(r)) for r in h[:rank]]
    out.sort(key=lambda r: max(i for i, x in enumerate(r) if x))
    return out


@dataclass(frozen=True)
class IntLattice:
    """Truncated basis of the value lattice of one graded slice.

    Generators are ordered by strictly increasing ``t``-degree; each takes
    base-ring values at every nonnegative integer.
    """

    parity: str
    degree: int
    mode: DunklMode
    truncation: int
    generators: tuple[ActionPoly, ...]

    def newton_matrix(self) -> list[list[CoefPoly]]:
        size = self.truncation + 1
        out = []
        for g in self.generators:
            coords = to_newton(g)
            coords += [CoefPoly(0)] * (size - len(coords))
            out.append(coords)
        return out

    def contains(self, f: ActionPoly) -> Optional[list[int]]:
        """Integer coordinates of ``f`` in this basis, or ``None``."""
        return integer_span_coordinates(self.generators, f)


def integer_span_coordinates(
    generators: Sequence[ActionPoly], f: ActionPoly
) -> Optional[list[int]]:
    """Solve ``f = sum a_i g_i`` with integer ``a_i`` over a degree-triangular family.

    The generators must have pairwise distinct ``t``-degrees (true for every
    lattice basis produced here).  Returns the coordinate list aligned with
    ``generators`` or ``None`` when no integer solution exists.
    """
    by_degree = {}
    for idx, g in enumerate(generators):
        if g.degree in by_degree:
            raise ValueError("generators must have distinct degrees")
        by_degree[g.degree] = idx
    coords = [0] * len(generators)
    rem = f
    while not rem.is_zero:
        deg = rem.degree
        idx = by_degree.get(deg)
        if idx is None:
            return None
        g = generators[idx]
        lead_g = g.leading()
        lead_r = rem.leading()
        if not (lead_g.is_constant and lead_r.is_constant):
            # ratio of leading coefficients must be a plain integer
            quot_poly = _coef_divide(lead_r, lead_g)
            if quot_poly is None:
                return None
            q = quot_poly
        else:
            q = lead_r.as_fraction() / lead_g.as_fraction()
        if isinstance(q, Fraction):
            if q.denominator != 1:
                return None
            q = int(q)
        elif isinstance(q, int):
            pass
        else:
            return None
        coords[idx] = q
        rem = rem - g * q
        if not rem.is_zero and rem.degree >= deg:
            return None
    return coords


def _coef_divide(num: CoefPoly, den: CoefPoly) -> Optional[int]:
    """Quotient of two CoefPolys when it is an integer scalar, else None."""
    if den.is_zero:
        return None
    ratio = None
    for deg, val in den.items():
        other = num.coeff(deg)
        r = other / val
        if ratio is None:
            ratio = r
        elif r != ratio:
            return None
    if ratio is None:
        return None
    if num != den * ratio:
        return None
    return int(ratio) if ratio.denominator == 1 else None


def _two_t_power(j: int) -> ActionPoly:
    return ActionPoly({j: 2**j})


def int_basis(parity: str, n: int, mode: DunklMode, max_t_degree: int) -> IntLattice:
    """Basis of the degree-``n`` value lattice, truncated at ``t``-degree ``M``.

    Symbolic mode returns the closed-form basis: binomials ``C(t, k)`` for
    ``n >= 0`` and ``l_poly * C(t, k + m)`` for ``n < 0``.  Numeric mode
    saturates the lattice spanned by the Newton coordinates of
    ``dunkl_poly * (2t)^j`` (just ``(2t)^j`` for ``n >= 0``) and converts the
    Hermite rows back to polynomials.
    """
    m = max_t_degree
    if m < max(0, -n):
        raise ValueError("truncation too small for this degree")
    if parity not in ("+", "-"):
        raise ValueError("parity must be '+' or '-'")
    if mode.is_symbolic:
        if n >= 0:
            gens = [binomial_poly(k) for k in range(m + 1)]
        else:
            shift = m_delta(1, -n) if parity == "+" else m_delta(0, -n)
            cofactor = l_poly(parity, -n)
            gens = [cofactor * binomial_poly(k + shift) for k in range(m + n + 1)]
    else:
        base = ActionPoly(1) if n >= 0 else mode.specialize(dunkl_poly(parity, -n))
        count = m + 1 if n >= 0 else m + n + 1
        size = m + 1
        rows = []
        for j in range(count):
            coords = to_newton(base * _two_t_power(j))
            row = []
            for alpha in coords:
                if not (alpha.is_constant and alpha.as_fraction().denominator == 1):
                    raise NonIntegralValues(
                        "numeric lattice construction needs an integer parameter value"
                    )
                row.append(int(alpha.as_fraction()))
            row += [0] * (size - len(row))
            rows.append(row)
        sat = saturate(rows)
        gens = [from_newton(row) for row in _degree_triangular(sat)]
    return IntLattice(parity, n, mode, m, tuple(gens))

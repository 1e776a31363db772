"""Abstract membership: the shifted module, the four components, log actions.

The divided power extension admits an intrinsic description: an operator
belongs to it exactly when it fixes the polynomial module and stabilizes the
shifted ladder spanned by ``mu_j = x^{j-1} |x|^{1+2c}`` for ``j >= 0``.  The
ladder obeys two formal rules: ``|x|^r`` is fixed by the reflection, and the
derivative sends ``|x|^r`` to ``r x^{-1} |x|^r``.  Consequently a graded piece
acts on ``mu_j`` by evaluating its parity-appropriate action polynomial at a
half-shifted argument, ``(j + 2c)/2`` on the even-type rungs (odd ``j``) and
``(j - 1 + 2c)/2`` on the odd-type rungs.

Stabilizing the ladder is a *setwise* condition: the terms that would fall
below the bottom rung must vanish identically.  Away from half-integer
parameter values those vanishing conditions are exactly divisibility by the
Dunkl product polynomials, which is the divided power criterion; at
half-integer values the product polynomials acquire double roots that
single-point vanishing cannot see, and the two tests genuinely diverge.  The
log-module action is the primitive that tracks such double roots.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .lattices import SYMBOLIC, DunklMode, dunkl_poly
from .operators import (
    Operator,
    basis_enumerate,
    compose,
    dp_membership,
    e_minus,
    e_plus,
    preserves_polynomials,
    x_inv,
    x_op,
)
from .poly import ActionPoly, CoefPoly
from .weyl import WeylOp


@dataclass(frozen=True)
class ShiftedModuleElement:
    """One ladder term: the index ``j`` of ``mu_j`` and its coefficient."""

    index: int
    coefficient: CoefPoly


class OutOfModule(ValueError):
    """A term with nonzero coefficient fell below the bottom ladder rung."""

    def __init__(self, index: int, coefficient: CoefPoly):
        self.index = index
        self.coefficient = coefficient
        super().__init__(f"nonzero term at mu_{index}: coefficient {coefficient}")


def _shifted_argument(mode: DunklMode, j: int, parity_of_rung: int) -> CoefPoly:
    # even-type rung (odd j): argument (j + 2c)/2; odd-type: (j - 1 + 2c)/2
    base = Fraction(j if parity_of_rung == 0 else j - 1, 2)
    if mode.is_symbolic:
        return CoefPoly({0: base, 1: 1})
    return CoefPoly(base + mode.c_value)


def act_on_shifted(q: Operator, j: int, min_index: int = 0) -> list[ShiftedModuleElement]:
    """Image of ``mu_j`` under the operator, by the formal ladder rules.

    Raises :class:`OutOfModule` when a term with nonzero coefficient lands at
    an index below ``min_index`` (0 for the full shifted module, 1 for the
    sub-ladder without its bottom rung).
    """
    if j < 0:
        raise ValueError("ladder index must be nonnegative")
    rung_parity = 0 if j % 2 == 1 else 1  # mu_j is even-type exactly when j is odd
    out = []
    for n in sorted(q.pieces):
        p = q.pieces[n]
        f = p.f_plus if rung_parity == 0 else p.f_minus
        if f.is_zero:
            continue
        coefficient = f.eval_coef(_shifted_argument(q.mode, j, rung_parity))
        if not coefficient:
            continue
        if j + n < min_index:
            raise OutOfModule(j + n, coefficient)
        out.append(ShiftedModuleElement(j + n, coefficient))
    return out


def stabilizes_shifted(q: Operator, min_index: int = 0, j_limit: Optional[int] = None) -> bool:
    """True when no ladder rung leaks below ``min_index`` under the operator."""
    if j_limit is None:
        j_limit = _default_j_limit(q)
    for j in range(min_index, j_limit + 1):
        try:
            act_on_shifted(q, j, min_index)
        except OutOfModule:
            return False
    return True


def _default_j_limit(q: Operator) -> int:
    max_piece = max((abs(n) for n in q.pieces), default=0)
    return 2 * max(q.max_poly_degree(), 0) + 2 * max_piece + 4

def in_Hc(q: Operator, degree_bound: Optional[int] = None) -> bool:
    """Intrinsic membership: fixes polynomials and stabilizes the shifted ladder.

    Leakage is only possible from the finitely many rungs below a piece's
    drop, so checking ladder indices up to ``2 N + 2 max|n| + 4`` (``N`` the
    action-polynomial degree bound) decides the condition exactly.
    """
    if not preserves_polynomials(q):
        return False
    if degree_bound is None:
        j_limit = _default_j_limit(q)
    else:
        max_piece = max((abs(n) for n in q.pieces), default=0)
        j_limit = 2 * degree_bound + 2 * max_piece + 4
    return stabilizes_shifted(q, 0, j_limit)


# -- four-component decomposition ------------------------------------------------


@dataclass(frozen=True)
class SplitComponent:
    name: str
    operator: Operator
    conditions: dict[str, bool]

    @property
    def member(self) -> bool:
        return all(self.conditions.values())


def four_component_split(q: Operator) -> dict[str, SplitComponent]:
    """Sandwich the operator between projectors and test each component.

    Components are keyed ``B`` (even diagonal), ``Bbar`` (odd diagonal),
    ``A`` (odd-of-even), ``Abar`` (even-of-odd); each carries the membership
    conditions of its defining set.  The four components always sum back to
    the operator.
    """
    mode = q.mode
    ep, em = e_plus(mode), e_minus(mode)
    x, xi = x_op(mode), x_inv(mode)
    b = compose(ep, compose(q, ep))
    bbar = compose(em, compose(q, em))
    a = compose(em, compose(q, ep))
    abar = compose(ep, compose(q, em))
    return {
        "B": SplitComponent(
            "B",
            b,
            {
                "fixes polynomials": preserves_polynomials(b),
                "stabilizes shifted ladder above bottom": stabilizes_shifted(b, 1),
            },
        ),
        "Bbar": SplitComponent(
            "Bbar",
            bbar,
            {
                "conjugate fixes polynomials": preserves_polynomials(
                    compose(xi, compose(bbar, x))
                ),
                "conjugate stabilizes shifted ladder": stabilizes_shifted(
                    compose(x, compose(bbar, xi)), 1
                ),
            },
        ),
        "A": SplitComponent(
            "A",
            a,
            {
                "fixes polynomials": preserves_polynomials(a),
                "x-composite stabilizes shifted ladder": stabilizes_shifted(
                    compose(x, a), 1
                ),
            },
        ),
        "Abar": SplitComponent(
            "Abar",
            abar,
            {
                "x-composite fixes polynomials": preserves_polynomials(compose(abar, x)),
                "conjugate stabilizes shifted ladder": stabilizes_shifted(
                    compose(x, compose(abar, xi)), 1
                ),
            },
        ),
    }


# -- log-module action --------------------------------------------------------------


@dataclass(frozen=True)
class LogValue:
    """Image of ``x^n log x``: plain part plus the ``log`` part."""

    plain: CoefPoly
    logpart: CoefPoly


def log_act(op: Union[WeylOp, Operator], n: int) -> LogValue:
    """Action on ``x^n log x`` of a homogeneous operator.

    With full-exponent action polynomial ``f`` and degree ``d`` the image is
    ``f'(n) x^{n+d} + f(n) x^{n+d} log x``, the derivative taken in the
    exponent variable (so graded pieces of the parity-split engine, whose
    polynomials use the half-exponent, contribute half their ``t``-derivative).
    """
    if isinstance(op, WeylOp):
        if len(op.pieces) != 1:
            raise ValueError("log action needs a homogeneous operator")
        ((_, f),) = op.pieces.items()
        return LogValue(f.derivative().eval(n), f.eval(n))
    if isinstance(op, Operator):
        if len(op.pieces) != 1:
            raise ValueError("log action needs a homogeneous operator")
        ((_, piece),) = op.pieces.items()
        parity = n % 2
        f = piece.f_minus if parity else piece.f_plus
        t0 = (n - parity) // 2
        return LogValue(f.derivative().eval(t0) * Fraction(1, 2), f.eval(t0))
    raise TypeError(f"not an operator: {op!r}")


# -- equivalence experiments ----------------------------------------------------------


def random_dp_member(mode: DunklMode, rng: random.Random, degree_bound: int) -> Operator:
    """Random integer combination of explicit basis elements."""
    elements = basis_enumerate("+", degree_bound, mode) + basis_enumerate(
        "-", degree_bound, mode
    )
    q = Operator.zero(mode)
    for element in rng.sample(elements, k=min(4, len(elements))):
        q = q + element.operator.scale(rng.randint(-5, 5))
    return q


def defective_piece(mode: DunklMode, rng: random.Random) -> Operator:
    """A graded piece certified to break divided power membership.

    Either an integrality defect (a coefficient that cannot be cleared while
    staying polynomial-preserving fails the value test) or a divisibility
    defect (a negative-degree piece whose action polynomial is too small to
    contain the required Dunkl product polynomial).
    """
    kind = rng.choice(("integrality", "divisibility"))
    if kind == "integrality":
        parity = rng.choice(("+", "-"))
        value = Fraction(1, rng.choice((3, 5, 7)))
        poly = ActionPoly({0: value})
        f_plus, f_minus = (poly, 0) if parity == "+" else (0, poly)
        return Operator.piece(mode, 0, f_plus, f_minus)
    # divisibility defect: degree -2 piece with an even action polynomial of
    # degree 1 < 2, vanishing at the monomial boundary so it still fixes
    # polynomials, but too small to be divisible by the order-2 product.
    scale = rng.randint(1, 4)
    return Operator.piece(mode, -2, ActionPoly({1: 2 * scale}), 0)


def random_non_member(mode: DunklMode, rng: random.Random, degree_bound: int) -> Operator:
    q = random_dp_member(mode, rng, degree_bound) + defective_piece(mode, rng)
    witness, _ = dp_membership(q)
    if witness is not None:
        # the random member cancelled the defect; retry deterministically
        return random_non_member(mode, rng, degree_bound)
    return q


def half_integer_finding(mode: DunklMode) -> Operator:
    """An operator separating the two membership tests at half-integer ``c``.

    The odd-parity order-2 product polynomial degenerates to ``4t^2`` at
    ``c = 1/2``, so an action polynomial vanishing at 0 only to first order
    stabilizes the ladder without being divisible by the product.
    """
    return Operator.piece(mode, -2, 0, ActionPoly({2: 4, 1: -4}))


def equivalence_report(
    c_values: Sequence[Union[int, Fraction]],
    degree_bound: int = 6,
    sample_count: int = 20,
    seed: int = 20260810,
) -> dict:
    """Compare the divided power test with the intrinsic test per parameter value.

    For integer parameter values the two tests agree on every sample (member
    or constructed non-member) and any disagreement is reported as a failure;
    for half-integer values disagreements are expected findings and a known
    separating operator is appended to the samples.
    """
    rows = []
    disagreements: dict[str, int] = {}
    for c_value in c_values:
        c_value = Fraction(c_value)
        mode = DunklMode.numeric(c_value)
        rng = random.Random((seed, c_value.numerator, c_value.denominator))
        samples: list[tuple[str, Operator]] = []
        for i in range(sample_count):
            if i % 2 == 0:
                samples.append(("member", random_dp_member(mode, rng, degree_bound)))
            else:
                samples.append(("defect", random_non_member(mode, rng, degree_bound)))
        if c_value.denominator == 2:
            samples.append(("separator", half_integer_finding(mode)))
        for label, q in samples:
            witness, _ = dp_membership(q)
            dp = witness is not None
            hc = in_Hc(q, degree_bound)
            agree = dp == hc
            if not agree:
                key = str(mode)
                disagreements[key] = disagreements.get(key, 0) + 1
            rows.append(
                {
                    "c": str(c_value),
                    "operator": label,
                    "pieces": len(q.pieces),
                    "in_dp": dp,
                    "in_Hc": hc,
                    "agree": agree,
                }
            )
    integer_disagreements = sum(
        count
        for key, count in disagreements.items()
        if "/" not in key
    )
    return {
        "rows": rows,
        "disagreements": disagreements,
        "integer_disagreements": integer_disagreements,
    }

"""The full invariant suite behind the ``verify`` subcommand.

Every module's contract is re-checked here from scratch: randomized property
checks run with fixed seeds so the suite is deterministic, and each check is
registered under a stable name so a failure pinpoints the broken contract.
The pytest suite calls the same functions; ``verify`` aggregates them and
reports one line per check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd
from typing import Callable

from . import words
from .lattices import (
    SYMBOLIC,
    DunklMode,
    divisor_of_values,
    dunkl_poly,
    int_basis,
    l_poly,
    m_delta,
    saturate,
)
from .membership import (
    OutOfModule,
    act_on_shifted,
    equivalence_report,
    four_component_split,
    half_integer_finding,
    in_Hc,
    log_act,
    random_dp_member,
    random_non_member,
)
from .operators import (
    BasisElement,
    Operator,
    basis_enumerate,
    basis_labels,
    compose,
    d_op,
    decompose_in_basis,
    delta_basis,
    delta_numerator,
    dp_membership,
    e_minus,
    e_plus,
    from_word,
    graded_dimension,
    in_dp,
    operator_divisor,
    operator_order,
    partial_op,
    preserves_polynomials,
    s_op,
    x_op,
)
from .poly import (
    ActionPoly,
    CoefPoly,
    binomial_poly,
    from_newton,
    integer_content,
    pascal_matrix,
    to_newton,
)
from .sl2 import Sl2Triple, bracket, build_triple, casimir, casimir_scalar, sigma, spherical_basis
from .weyl import (
    WeylOp,
    base_ring_units_are_pm_one,
    decompose_weyl,
    hasse,
    identity_weyl,
    partial_weyl,
    tensor_divisor_check,
    weyl_compose,
    weyl_divisor,
    weyl_dp_basis,
    x_weyl,
)


# -- random builders -------------------------------------------------------------


def random_coef_poly(rng, max_c_degree=2, bound=9, denominators=(1,)):
    return CoefPoly(
        {
            d: Fraction(rng.randint(-bound, bound), rng.choice(denominators))
            for d in range(rng.randint(0, max_c_degree) + 1)
        }
    )


def random_action_poly(rng, max_t_degree=8, max_c_degree=2, bound=9, denominators=(1,)):
    degree = rng.randint(0, max_t_degree)
    data = {
        d: random_coef_poly(rng, max_c_degree, bound, denominators)
        for d in range(degree + 1)
    }
    data[degree] = data[degree] + CoefPoly(1)  # keep the intended degree
    return ActionPoly(data)


_ATOMS = ("x", "D", "e+", "e-", "s", "c")


def random_word(rng, depth=4) -> words.Word:
    # literal tokens are nonnegative; negative values come from unary minus
    if depth <= 0 or rng.random() < 0.3:
        roll = rng.random()
        if roll < 0.5:
            return words.Sym(rng.choice(_ATOMS))
        if roll < 0.7:
            return words.Lit(Fraction(rng.randint(0, 6)))
        if roll < 0.85:
            return words.Lit(Fraction(rng.randint(1, 9), rng.randint(2, 9)))
        return words.Neg(words.Lit(Fraction(rng.randint(1, 6))))
    roll = rng.random()
    if roll < 0.3:
        return words.Add(random_word(rng, depth - 1), random_word(rng, depth - 1))
    if roll < 0.5:
        return words.Sub(random_word(rng, depth - 1), random_word(rng, depth - 1))
    if roll < 0.85:
        return words.Mul(random_word(rng, depth - 1), random_word(rng, depth - 1))
    if roll < 0.95:
        return words.Neg(random_word(rng, depth - 1))
    return words.Pow(random_word(rng, depth - 2), rng.randint(0, 3))


def random_member_combination(rng, max_total_degree=8, max_c_degree=3, mode=SYMBOLIC):
    """Random base-ring combination of basis elements, with its coordinates."""
    elements = basis_enumerate("+", max_total_degree, mode) + basis_enumerate(
        "-", max_total_degree, mode
    )
    chosen = rng.sample(elements, k=rng.randint(1, 6))
    coords: dict[str, CoefPoly] = {}
    q = Operator.zero(mode)
    for element in chosen:
        coefficient = random_coef_poly(rng, max_c_degree, bound=9)
        if not coefficient:
            coefficient = CoefPoly(1)
        coords[element.label] = coords.get(element.label, CoefPoly(0)) + coefficient
        q = q + element.operator.scale(coefficient)
    coords = {k: v for k, v in coords.items() if v}
    return q, coords


def _invert_matrix(rows):
    """Exact inverse of a square rational matrix by Gauss-Jordan elimination."""
    n = len(rows)
    a = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        a[col], a[pivot] = a[pivot], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [v - factor * w for v, w in zip(a[r], a[col])]
    return [row[n:] for row in a]


def _fraction_rank(rows) -> int:
    a = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    ncols = len(a[0]) if a else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(a)) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = Fraction(1) / a[rank][col]
        a[rank] = [v * inv for v in a[rank]]
        for r in range(len(a)):
            if r != rank and a[r][col]:
                factor = a[r][col]
                a[r] = [v - factor * w for v, w in zip(a[r], a[rank])]
        rank += 1
    return rank


# -- poly_core -------------------------------------------------------------------


def check_newton_roundtrip() -> bool:
    rng = random.Random(101)
    for _ in range(60):
        f = random_action_poly(rng, 12, 2, 30, denominators=(1, 2, 3, 4, 5))
        if from_newton(to_newton(f)) != f:
            return False
    return bool(to_newton(ActionPoly(0)) == [])


def check_pascal_unipotence() -> bool:
    for size in (5, 17):  # covers N = 16
        lower = pascal_matrix(size)
        inverse = _invert_matrix(lower)
        for row in inverse:
            if any(v.denominator != 1 for v in row):
                return False
        for i in range(size):
            for j in range(size):
                value = sum(lower[i][k] * inverse[k][j] for k in range(size))
                if value != (1 if i == j else 0):
                    return False
    return True


def check_newton_evaluation_consistency() -> bool:
    rng = random.Random(102)
    for _ in range(40):
        f = random_action_poly(rng, 9, 2, 20, denominators=(1, 2, 3))
        g = from_newton(to_newton(f))
        for n in range(f.degree + 4):
            if f.eval(n) != g.eval(n):
                return False
    return True


def check_content_scalar_multiplicativity() -> bool:
    rng = random.Random(103)
    for _ in range(40):
        f = random_action_poly(rng, 6, 2, 20)
        for m in (-7, -1, 2, 12):
            if integer_content(f * m) != abs(m) * integer_content(f):
                return False
    return True


# -- intval ----------------------------------------------------------------------


def check_divisor_oracle_agreement() -> bool:
    rng = random.Random(104)
    for _ in range(200):
        f = random_action_poly(rng, 8, 2, 50)
        expected = 0
        for n in range(f.degree + 3):
            expected = gcd(expected, f.eval(n).integer_content())
        if divisor_of_values(f, SYMBOLIC) != expected:
            return False
    return True


def check_dunkl_binomial_factorization() -> bool:
    for k in range(11):
        m1 = m_delta(1, k)
        lhs = dunkl_poly("+", k)
        rhs = l_poly("+", k) * binomial_poly(m1) * (2**m1 * factorial(m1))
        if lhs != rhs:
            return False
        m0 = m_delta(0, k)
        lhs = dunkl_poly("-", k)
        rhs = l_poly("-", k) * binomial_poly(m0) * (2**m0 * factorial(m0))
        if lhs != rhs:
            return False
    return True


_LATTICE_MODES = (SYMBOLIC, DunklMode.numeric(0), DunklMode.numeric(1), DunklMode.numeric(-2))


def check_int_basis_valuedness() -> bool:
    for mode in _LATTICE_MODES:
        for parity in "+-":
            for n in range(-3, 3):
                m = 5
                lattice = int_basis(parity, n, mode, m)
                for g in lattice.generators:
                    spec = mode.specialize(g)
                    for t in range(m + 3):
                        if not spec.eval(t).is_integral:
                            return False
                    if n < 0:
                        # some integer multiple must land in the un-divided slice
                        divisor = mode.specialize(dunkl_poly(parity, -n))
                        if spec.divexact(divisor) is None:
                            return False
    return True


def check_int_basis_maximality() -> bool:
    primes = (2, 3, 5, 7, 11, 13)
    for mode in _LATTICE_MODES:
        for parity in "+-":
            for n in range(-3, 3):
                m = 5
                lattice = int_basis(parity, n, mode, m)
                for g in lattice.generators:
                    spec = mode.specialize(g)
                    for q in primes:
                        if all(
                            spec.eval(t).integer_content() % q == 0
                            for t in range(m + 3)
                        ):
                            return False
    return True


def check_int_basis_triangularity() -> bool:
    for mode in _LATTICE_MODES:
        for parity in "+-":
            for n in range(-3, 3):
                lattice = int_basis(parity, n, mode, 5)
                degrees = [g.degree for g in lattice.generators]
                if degrees[0] != max(0, -n):
                    return False
                if degrees != list(range(degrees[0], degrees[0] + len(degrees))):
                    return False
    return True


def check_saturate_examples() -> bool:
    return (
        saturate([[2, 0], [0, 2]]) == [[1, 0], [0, 1]]
        and saturate([[2, 4]]) == [[1, 2]]
        and saturate([[1, 0]]) == [[1, 0]]
    )


# -- opalgebra ---------------------------------------------------------------------


def _relation_pairs(mode: DunklMode):
    one = Operator.identity(mode)
    x, d, s = x_op(mode), d_op(mode), s_op(mode)
    ep, em = e_plus(mode), e_minus(mode)
    two_c = Operator.scalar(mode, CoefPoly({1: 2}))
    return [
        ("s^2 = 1", s * s, one),
        ("e+^2 = e+", ep * ep, ep),
        ("e-^2 = e-", em * em, em),
        ("e+ e- = 0", ep * em, Operator.zero(mode)),
        ("e- e+ = 0", em * ep, Operator.zero(mode)),
        ("e+ + e- = 1", ep + em, one),
        ("s x s = -x", s * x * s, -x),
        ("[D, x] = 1 - 2c s", d * x - x * d, one - two_c * s),
        ("D e+ = e- D", d * ep, em * d),
        ("D e- = e+ D", d * em, ep * d),
    ]


def check_relation_suite() -> bool:
    for mode in (SYMBOLIC, DunklMode.numeric(3)):
        for _, lhs, rhs in _relation_pairs(mode):
            if lhs != rhs:
                return False
            for k in range(-32, 33):
                if lhs.act(k) != rhs.act(k):
                    return False
    return True


def check_composition_soundness() -> bool:
    rng = random.Random(105)
    for mode in (SYMBOLIC, DunklMode.numeric(1)):
        for _ in range(50):
            a = from_word(random_word(rng, 3), mode)
            b = from_word(random_word(rng, 3), mode)
            ab = compose(a, b)
            for k in range(-16, 17):
                if ab.act(k) != a.act_on(b.act(k)):
                    return False
    return True


def check_grading_homogeneity() -> bool:
    rng = random.Random(106)
    generators = {"x": 1, "D": -1, "e+": 0, "e-": 0, "s": 0}
    for _ in range(60):
        names = [rng.choice(list(generators)) for _ in range(rng.randint(1, 6))]
        expected = sum(generators[n] for n in names)
        q = Operator.identity(SYMBOLIC)
        for name in names:
            q = q * from_word(words.Sym(name), SYMBOLIC)
        if not q.is_zero and q.degrees != (expected,):
            return False
    return True


def check_divisor_linearity() -> bool:
    rng = random.Random(107)
    for _ in range(25):
        q, _ = random_member_combination(rng, 6, 2)
        numerator = in_dp(q).numerator
        base = operator_divisor(numerator)
        for m in (-3, 2, 5):
            if operator_divisor(numerator.scale(m)) != abs(m) * base:
                return False
        # brute force over a generous exponent window
        window = 2 * max(numerator.max_poly_degree(), 0) + max(
            (abs(n) for n in numerator.pieces), default=0
        ) + 4
        brute = 0
        for k in range(window + 1):
            for coeff in numerator.act(k).values():
                brute = gcd(brute, coeff.integer_content())
        if brute != base:
            return False
    return True


def check_delta_integrality() -> bool:
    for sign in "+-":
        for k1 in range(13):
            for k2 in range((12 - k1) // 2 + 1):
                op = delta_basis(sign, k1, k2)
                if in_dp(op) is None:
                    return False
                for k in range(41):
                    if any(not v.is_integral for v in op.act(k).values()):
                        return False
    return True


def check_delta_maximality() -> bool:
    for sign in "+-":
        for k1 in range(11):
            for k2 in range((10 - k1) // 2 + 1):
                numerator, denominator = delta_numerator(sign, k1, k2)
                if operator_divisor(numerator) != denominator:
                    return False
    return True


def check_basis_roundtrip() -> bool:
    rng = random.Random(108)
    for _ in range(100):
        q, coords = random_member_combination(rng, 8, 3)
        if decompose_in_basis(q) != coords:
            return False
    return True


def check_hilbert_series() -> bool:
    return all(graded_dimension(m) == 2 * (m + 1) for m in range(13))


def check_pbw_independence() -> bool:
    c_probe = Fraction(5, 7)
    for bound in (8,):
        for parity in "+-":
            by_degree: dict[int, list[int]] = {}
            for a in range(bound + 1):
                for b in range(bound + 1 - a):
                    by_degree.setdefault(a - b, []).append(b)
            for degree, bs in by_degree.items():
                size = max(dunkl_poly(parity, b).degree for b in bs) + 1
                rows = []
                for b in bs:
                    coords = to_newton(dunkl_poly(parity, b).substitute_c(c_probe))
                    row = [v.as_fraction() for v in coords]
                    row += [Fraction(0)] * (size - len(row))
                    rows.append(row)
                if _fraction_rank(rows) != len(rows):
                    return False
    return True


# -- weyl -------------------------------------------------------------------------


def check_hasse_pascal_columns() -> bool:
    for k in range(7):
        h = hasse(k)
        for t in range(2 * k + 1):
            image = h.act(t)
            value = image.get(t - k, CoefPoly(0)).as_fraction()
            if value != comb(t, k):
                return False
    return True


def check_hasse_composition_identity() -> bool:
    for a in range(6):
        for b in range(6):
            lhs = weyl_compose(hasse(a), hasse(b))
            rhs = hasse(a + b).scale(comb(a + b, a))
            if lhs != rhs:
                return False
            for t in range(13):
                if lhs.act(t) != rhs.act(t):
                    return False
    return True


def check_partial_power_divisor() -> bool:
    partial = partial_weyl()
    power = identity_weyl()
    for k in range(9):
        if weyl_divisor(power) != factorial(k):
            return False
        power = weyl_compose(partial, power)
    return True


def check_weyl_basis_closure() -> bool:
    basis = weyl_dp_basis(4)
    for _, a in basis:
        for _, b in basis:
            coords = decompose_weyl(weyl_compose(a, b))
            if coords is None:
                return False
            if any(v.denominator != 1 for v in coords.values()):
                return False
    return True


def check_units_hypothesis() -> bool:
    return base_ring_units_are_pm_one(SYMBOLIC) and base_ring_units_are_pm_one(
        DunklMode.numeric(0)
    )


def check_tensor_implication() -> bool:
    dunkl_side = basis_enumerate("+", 4) + basis_enumerate("-", 4)
    weyl_side = weyl_dp_basis(4)
    for element in dunkl_side:
        for _, w in weyl_side:
            for d in (2, 3, 4, 5, 7):
                if not tensor_divisor_check(element.operator, w, d, table_size=12):
                    return False
    # a scaled pair where the hypothesis actually fires
    de_plus = d_op() * e_plus()
    if not tensor_divisor_check(de_plus, hasse(1).scale(2), 2):
        return False
    return True


# -- abstract ------------------------------------------------------------------------


_EQUIV_C_VALUES = (-3, -1, 0, 1, 2)


def check_equivalence_desk_scale() -> bool:
    rng = random.Random(109)
    for c_value in _EQUIV_C_VALUES:
        mode = DunklMode.numeric(c_value)
        for element in basis_enumerate("+", 8, mode) + basis_enumerate("-", 8, mode):
            if in_dp(element.operator) is None:
                return False
            if not in_Hc(element.operator, 8):
                return False
        for _ in range(50):
            q = random_non_member(mode, rng, 6)
            if in_dp(q) is not None:
                return False
            if in_Hc(q, 8):
                return False
    return True


def check_four_split_sum_idempotent() -> bool:
    rng = random.Random(110)
    for mode in (SYMBOLIC, DunklMode.numeric(1)):
        for _ in range(20):
            q = from_word(random_word(rng, 3), mode)
            split = four_component_split(q)
            total = Operator.zero(mode)
            for component in split.values():
                total = total + component.operator
            if total != q:
                return False
            for key, component in split.items():
                again = four_component_split(component.operator)
                for key2, inner in again.items():
                    expected = component.operator if key2 == key else Operator.zero(mode)
                    if inner.operator != expected:
                        return False
    return True


def check_log_product_rule() -> bool:
    rng = random.Random(111)
    for _ in range(30):
        da, db = rng.randint(-3, 3), rng.randint(-3, 3)
        fa = random_action_poly(rng, 3, 0, 6)
        fb = random_action_poly(rng, 3, 0, 6)
        a, b = WeylOp({da: fa}), WeylOp({db: fb})
        ab = weyl_compose(a, b)
        if ab.is_zero:
            continue
        for n in range(-8, 9):
            got = log_act(ab, n)
            plain = fb.derivative().eval(n) * fa.eval(n + db) + fb.eval(n) * fa.derivative().eval(n + db)
            logpart = fb.eval(n) * fa.eval(n + db)
            if got.plain != plain or got.logpart != logpart:
                return False
    # parity-split pieces: chain rule through the log action itself
    for _ in range(20):
        da, db = rng.randint(-3, 3), rng.randint(-3, 3)
        a = Operator.piece(SYMBOLIC, da, random_action_poly(rng, 3, 1, 6), random_action_poly(rng, 3, 1, 6))
        b = Operator.piece(SYMBOLIC, db, random_action_poly(rng, 3, 1, 6), random_action_poly(rng, 3, 1, 6))
        ab = compose(a, b)
        if len(ab.pieces) != 1:
            continue
        for n in range(-8, 9):
            va = log_act(a, n + db)
            vb = log_act(b, n)
            got = log_act(ab, n)
            if got.logpart != vb.logpart * va.logpart:
                return False
            if got.plain != vb.plain * va.logpart + vb.logpart * va.plain:
                return False
    return True


def check_shifted_specialization() -> bool:
    rng = random.Random(112)
    for _ in range(20):
        word = random_word(rng, 3)
        symbolic = from_word(word, SYMBOLIC)
        c_value = rng.choice((-2, 0, 1, 3))
        numeric = from_word(word, DunklMode.numeric(c_value))
        for j in range(8):
            try:
                sym = act_on_shifted(symbolic, j)
                sym_spec = sorted(
                    (term.index, CoefPoly(term.coefficient.eval(c_value)))
                    for term in sym
                )
                sym_spec = [(i, v) for i, v in sym_spec if v]
            except OutOfModule:
                sym_spec = None
            try:
                num = act_on_shifted(numeric, j)
                num_spec = sorted((term.index, term.coefficient) for term in num)
            except OutOfModule:
                num_spec = None
            if sym_spec is None or num_spec is None:
                continue  # leakage can be c-dependent; values compared only when both exist
            if sym_spec != num_spec:
                return False
    return True


def check_half_integer_findings() -> bool:
    report = equivalence_report([Fraction(1, 2)], degree_bound=4, sample_count=4)
    if not report["rows"]:
        return False
    mode = DunklMode.numeric(Fraction(1, 2))
    separator = half_integer_finding(mode)
    return in_Hc(separator, 4) and in_dp(separator) is None


def check_order_descent() -> bool:
    rng = random.Random(113)
    x = x_op(SYMBOLIC)
    for _ in range(30):
        q = Operator.zero(SYMBOLIC)
        for _ in range(rng.randint(1, 3)):
            term = Operator.identity(SYMBOLIC).scale(rng.randint(-4, 4))
            for _ in range(rng.randint(0, 4)):
                term = term * rng.choice((x, partial_op(SYMBOLIC)))
            q = q + term
        if q.is_zero:
            continue
        commutator = compose(q, x) - compose(x, q)
        if operator_order(q) == 0:
            if not commutator.is_zero:
                return False
        elif not commutator.is_zero and operator_order(commutator) >= operator_order(q):
            return False
    return True


# -- sl2 --------------------------------------------------------------------------


def check_sl2_brackets() -> bool:
    for mode in (SYMBOLIC, DunklMode.numeric(2)):
        triple = build_triple(mode)
        if bracket(triple.H, triple.E) != triple.E.scale(2):
            return False
        if bracket(triple.H, triple.F) != triple.F.scale(-2):
            return False
        if bracket(triple.E, triple.F) != triple.H:
            return False
    return True


def check_casimir_central_character() -> bool:
    for mode in (SYMBOLIC, DunklMode.numeric(0), DunklMode.numeric(Fraction(1, 2))):
        expected = e_plus(mode).scale(casimir_scalar(mode))
        if casimir(mode) != expected:
            return False
    return True


def check_sigma_delta_correspondence() -> bool:
    for n in range(5):
        for k in range(5 - n):
            if sigma(0, n, k) != delta_basis("+", 2 * n, k):
                return False
            if sigma(n + 1, 0, k) != x_op() ** (2 * n + 2) * delta_basis("+", 0, k):
                return False
    return sigma(0, 0, 0) == e_plus()


def check_spherical_decomposition_labels() -> bool:
    rng = random.Random(114)
    spherical = spherical_basis(8)
    labels = {label for label, _, _ in spherical}
    for _ in range(20):
        q = Operator.zero(SYMBOLIC)
        for label, _, op in rng.sample(spherical, k=4):
            q = q + op.scale(rng.randint(-5, 5))
        if q.is_zero:
            continue
        if not set(decompose_in_basis(q)) <= labels:
            return False
    return True


# -- cli / words --------------------------------------------------------------------


def check_parser_roundtrip() -> bool:
    rng = random.Random(115)
    for _ in range(200):
        w = random_word(rng, 6)
        if words.parse(words.print_word(w)) != w:
            return False
    return True


def check_json_schema_validation() -> bool:
    import jsonschema

    from .cli import run_for_json
    from .serialize import schema

    outputs = [
        run_for_json(["normalize", "D*x - x*D"]),
        run_for_json(["act", "D^2*e+", "--kmax", "6"]),
        run_for_json(["act", "x*D*e+", "--c", "0", "--prime", "3", "--kmax", "6"]),
        run_for_json(["divisor", "D*e+"]),
        run_for_json(["member", "1/2*x*D*e+"]),
        run_for_json(["member", "1/2*D*e-"]),
        run_for_json(["basis", "--max-degree", "3"]),
        run_for_json(["decompose", "D*e+"]),
        run_for_json(["hilbert", "--max-degree", "5"]),
        run_for_json(["sl2", "--max-degree", "3"]),
        run_for_json(["abstract", "--c-values", "0,1/2", "--samples", "2"]),
    ]
    validator = jsonschema.Draft202012Validator(schema())
    for payload in outputs:
        validator.validate(payload)
    return True


# -- registry ------------------------------------------------------------------------


@dataclass
class Check:
    name: str
    fn: Callable[[], bool]


CHECKS: list[Check] = [
    Check("poly.newton-roundtrip", check_newton_roundtrip),
    Check("poly.pascal-unipotence", check_pascal_unipotence),
    Check("poly.newton-evaluation-consistency", check_newton_evaluation_consistency),
    Check("poly.content-scalar-multiplicativity", check_content_scalar_multiplicativity),
    Check("intval.divisor-oracle-agreement", check_divisor_oracle_agreement),
    Check("intval.dunkl-binomial-factorization", check_dunkl_binomial_factorization),
    Check("intval.int-basis-valuedness", check_int_basis_valuedness),
    Check("intval.int-basis-maximality", check_int_basis_maximality),
    Check("intval.int-basis-triangularity", check_int_basis_triangularity),
    Check("intval.saturate-examples", check_saturate_examples),
    Check("opalgebra.relation-suite", check_relation_suite),
    Check("opalgebra.composition-soundness", check_composition_soundness),
    Check("opalgebra.grading-homogeneity", check_grading_homogeneity),
    Check("opalgebra.divisor-linearity", check_divisor_linearity),
    Check("opalgebra.delta-integrality", check_delta_integrality),
    Check("opalgebra.delta-maximality", check_delta_maximality),
    Check("opalgebra.basis-roundtrip", check_basis_roundtrip),
    Check("opalgebra.hilbert-series", check_hilbert_series),
    Check("opalgebra.pbw-independence", check_pbw_independence),
    Check("weyl.hasse-pascal-columns", check_hasse_pascal_columns),
    Check("weyl.hasse-composition-identity", check_hasse_composition_identity),
    Check("weyl.partial-power-divisor", check_partial_power_divisor),
    Check("weyl.basis-closure", check_weyl_basis_closure),
    Check("weyl.units-hypothesis", check_units_hypothesis),
    Check("weyl.tensor-implication", check_tensor_implication),
    Check("abstract.equivalence-desk-scale", check_equivalence_desk_scale),
    Check("abstract.four-split-sum-idempotent", check_four_split_sum_idempotent),
    Check("abstract.log-product-rule", check_log_product_rule),
    Check("abstract.shifted-specialization", check_shifted_specialization),
    Check("abstract.half-integer-findings", check_half_integer_findings),
    Check("abstract.order-descent", check_order_descent),
    Check("sl2.brackets", check_sl2_brackets),
    Check("sl2.casimir-central-character", check_casimir_central_character),
    Check("sl2.sigma-delta-correspondence", check_sigma_delta_correspondence),
    Check("sl2.spherical-decomposition-labels", check_spherical_decomposition_labels),
    Check("cli.parser-roundtrip", check_parser_roundtrip),
    Check("cli.json-schema-validation", check_json_schema_validation),
]


def run_all():
    """Run every registered check; returns ``(passed, failed, rows)``."""
    passed = failed = 0
    rows = []
    for check in CHECKS:
        try:
            ok = bool(check.fn())
            detail = ""
        except Exception as exc:  # a crash is a failure with a reason
            ok = False
            detail = f"{type(exc).__name__}: {exc}"
        if ok:
            passed += 1
        else:
            failed += 1
        rows.append({"name": check.name, "ok": ok, **({"detail": detail} if detail else {})})
    return passed, failed, rows

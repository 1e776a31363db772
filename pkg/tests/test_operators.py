from fractions import Fraction

import pytest

from dunkl.lattices import SYMBOLIC, DunklMode
from dunkl.operators import (
    ModeMismatch,
    NotInDP,
    NotPolynomialPreserving,
    Operator,
    basis_enumerate,
    compose,
    d_op,
    decompose_in_basis,
    delta_basis,
    delta_numerator,
    dp_membership,
    e_minus,
    e_plus,
    from_text,
    grade_decompose,
    graded_dimension,
    in_dp,
    operator_divisor,
    preserves_polynomials,
    reduce_mod_p,
    s_op,
    x_op,
)
from dunkl.poly import ActionPoly, CoefPoly, binomial_poly
from dunkl.verification import (
    check_basis_roundtrip,
    check_composition_soundness,
    check_delta_integrality,
    check_delta_maximality,
    check_divisor_linearity,
    check_grading_homogeneity,
    check_hilbert_series,
    check_pbw_independence,
    check_relation_suite,
)


def test_from_word_examples():
    d = d_op()
    assert d.act(3) == {2: CoefPoly({0: 3, 1: -2})}  # (3 - 2c) x^2
    assert (e_plus() * e_minus()).is_zero
    commutator = from_text("D*x - x*D")
    expected = Operator.identity(SYMBOLIC) - s_op().scale(CoefPoly({1: 2}))
    assert commutator == expected
    piece = commutator.pieces[0]
    assert piece.f_plus == ActionPoly(CoefPoly({0: 1, 1: -2}))
    assert piece.f_minus == ActionPoly(CoefPoly({0: 1, 1: 2}))


def test_compose_examples():
    assert (x_op() * d_op()).act(6) == {6: CoefPoly(6)}  # 2t on x^{2t}
    assert e_plus() * e_plus() == e_plus()
    dd = compose(d_op(), d_op())
    assert dd.act(4) == {2: CoefPoly({0: 12, 1: -8})}  # 4(3 - 2c) x^2


def test_compose_mode_mismatch():
    with pytest.raises(ModeMismatch):
        compose(x_op(SYMBOLIC), x_op(DunklMode.numeric(1)))


def test_act_examples():
    assert d_op().act(-1) == {-2: CoefPoly({0: -1, 1: -2})}  # (-1 - 2c) x^-2
    assert (x_op() ** 5).act(0) == {5: CoefPoly(1)}
    q = compose(compose(d_op(), d_op()), e_plus())
    assert q.act(2) == {0: CoefPoly({0: 2, 1: -4})}  # 2(1 - 2c)


def test_grade_decompose_examples():
    q = from_text("x*D + D*x")
    assert list(grade_decompose(q)) == [0]
    pair = from_text("x + D")
    assert sorted(grade_decompose(pair)) == [-1, 1]
    assert grade_decompose(Operator.zero(SYMBOLIC)) == {}


def test_preserves_polynomials_examples():
    assert preserves_polynomials(d_op())
    assert not preserves_polynomials(Operator.piece(SYMBOLIC, -2, 1, 0))
    assert not preserves_polynomials(from_text("1/2 * D * e-"))


def test_operator_divisor_examples():
    assert operator_divisor(from_text("D*e+")) == 2
    assert operator_divisor(from_text("D*e-")) == 1
    assert operator_divisor(from_text("6*x")) == 6
    assert operator_divisor(Operator.zero(SYMBOLIC)) == 0


def test_operator_divisor_requires_preservation():
    with pytest.raises(NotPolynomialPreserving):
        operator_divisor(from_text("x^-1"))


def test_in_dp_examples():
    witness = in_dp(Operator.piece(SYMBOLIC, 0, binomial_poly(1), 0))
    assert witness is not None and witness.denominator == 2
    assert in_dp(from_text("1/2 * D * e-")) is None
    witness = in_dp(x_op())
    assert witness is not None and witness.denominator == 1
    assert witness.numerator == x_op()


def test_witness_reproduces_operator():
    q = delta_basis("+", 3, 2)
    witness = in_dp(q)
    assert witness.numerator.scale(Fraction(1, witness.denominator)) == q


def test_dp_membership_reason_strings():
    _, reason = dp_membership(from_text("1/2 * D * e-"))
    assert "exponent 1" in reason
    _, reason = dp_membership(Operator.piece(SYMBOLIC, -2, ActionPoly({1: 2}), 0))
    assert "not divisible" in reason


def test_delta_basis_examples():
    assert delta_basis("+", 1, 0) == from_text("1/2 * D * e+")
    assert delta_basis("-", 1, 0) == from_text("D * e-")
    assert delta_basis("+", 0, 1).act(2 * 5) == {10: CoefPoly(5)}  # C(t,1) = t


def test_delta_closed_form_action():
    # the engine-built operators match the lattice closed form
    from dunkl.lattices import l_poly, m_delta

    for sign in "+-":
        for k1 in range(5):
            for k2 in range(3):
                op = delta_basis(sign, k1, k2)
                piece = op.pieces[-k1] if k1 else op.pieces[0]
                delta = 1 if sign == "+" else 0
                expected = l_poly(sign, k1) * binomial_poly(k2 + m_delta(delta, k1))
                got = piece.f_plus if sign == "+" else piece.f_minus
                assert got == expected
                other = piece.f_minus if sign == "+" else piece.f_plus
                assert other.is_zero


def test_basis_enumerate_examples():
    zero = [b.label for b in basis_enumerate("+", 0)]
    assert zero == ["Delta+[0,0]"]
    assert basis_enumerate("+", 0)[0].operator == e_plus()
    assert basis_enumerate("-", 0)[0].operator == e_minus()
    one = {b.label for b in basis_enumerate("+", 1)}
    assert one == {"Delta+[0,0]", "Delta+[1,0]", "x^1*Delta+[0,0]"}
    for m in range(7):
        per_sign = [b for b in basis_enumerate("+", m) if b.total_degree == m]
        assert len(per_sign) == m + 1


def test_decompose_examples():
    assert decompose_in_basis(from_text("D*e+")) == {"Delta+[1,0]": CoefPoly(2)}
    assert decompose_in_basis(Operator.identity(SYMBOLIC)) == {
        "Delta+[0,0]": CoefPoly(1),
        "Delta-[0,0]": CoefPoly(1),
    }
    assert decompose_in_basis(from_text("x*D*e+")) == {"Delta+[0,1]": CoefPoly(2)}


def test_decompose_rejects_non_members():
    with pytest.raises(NotInDP):
        decompose_in_basis(from_text("1/2 * D * e-"))
    with pytest.raises(NotInDP):
        decompose_in_basis(x_op(DunklMode.numeric(1)))


def test_graded_dimension_examples():
    assert graded_dimension(0) == 2
    assert graded_dimension(3) == 8
    assert graded_dimension(10) == 22


def test_reduce_mod_p_examples():
    mode = DunklMode.numeric(0)
    table = reduce_mod_p(delta_basis("+", 1, 0, mode), 2, 9)
    for k, row in enumerate(table):
        if k % 2 == 0:
            t = k // 2
            assert row == ({k - 1: 1} if t % 2 else {})
        else:
            assert row == {}
    table = reduce_mod_p(e_plus(mode), 5, 6)
    assert [row.get(k) for k, row in enumerate(table)] == [1, None, 1, None, 1, None, 1]
    table = reduce_mod_p(x_op(mode), 3, 4)
    assert all(row == {k + 1: 1} for k, row in enumerate(table))


def test_reduce_mod_p_preconditions():
    with pytest.raises(NotInDP):
        reduce_mod_p(x_op(SYMBOLIC), 3, 4)
    with pytest.raises(NotInDP):
        reduce_mod_p(from_text("1/3 * x", DunklMode.numeric(0)), 3, 4)


def test_negative_powers_of_monomials():
    assert from_text("x^-1") == Operator.piece(SYMBOLIC, -1, 1, 1)
    assert from_text("x^-1 * x") == Operator.identity(SYMBOLIC)
    assert from_text("(2*x)^-2") * from_text("(2*x)^2") == Operator.identity(SYMBOLIC)
    assert from_text("s^-1") == s_op()
    with pytest.raises(Exception):
        from_text("D^-1")


def test_relation_suite():
    assert check_relation_suite()


def test_composition_soundness():
    assert check_composition_soundness()


def test_grading_homogeneity():
    assert check_grading_homogeneity()


def test_divisor_linearity():
    assert check_divisor_linearity()


def test_delta_integrality():
    assert check_delta_integrality()


def test_delta_maximality():
    assert check_delta_maximality()
    numerator, denominator = delta_numerator("+", 1, 0)
    assert operator_divisor(numerator) == denominator == 2


def test_basis_roundtrip():
    assert check_basis_roundtrip()


def test_hilbert_series():
    assert check_hilbert_series()


def test_pbw_independence():
    assert check_pbw_independence()

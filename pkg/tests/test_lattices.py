from fractions import Fraction

import pytest

from dunkl.lattices import (
    SYMBOLIC,
    DunklMode,
    NonIntegralValues,
    divisor_of_values,
    dunkl_poly,
    int_basis,
    integer_span_coordinates,
    l_poly,
    lattice_member,
    m_delta,
    saturate,
)
from dunkl.poly import ActionPoly, CoefPoly, binomial_poly
from dunkl.verification import (
    check_divisor_oracle_agreement,
    check_dunkl_binomial_factorization,
    check_int_basis_maximality,
    check_int_basis_triangularity,
    check_int_basis_valuedness,
)
from dunkl.words import as_action_poly, parse


def poly(expr):
    return as_action_poly(parse(expr))


def test_dunkl_poly_examples():
    assert dunkl_poly("+", 2) == poly("2*t*(2*t - 1 - 2*c)")
    assert dunkl_poly("-", 1) == poly("2*t + 1 - 2*c")
    assert dunkl_poly("+", 0) == ActionPoly(1)


def test_l_poly_examples():
    assert l_poly("+", 2) == poly("2*t - 1 - 2*c")
    assert l_poly("+", 1) == ActionPoly(1)
    assert l_poly("-", 1) == poly("2*t + 1 - 2*c")


def test_m_delta_examples():
    assert m_delta(1, 3) == 2
    assert m_delta(0, 3) == 1
    assert m_delta(1, 0) == 0


def test_divisor_of_values_examples():
    f = poly("t^2 + t")
    assert divisor_of_values(f, SYMBOLIC) == 2
    assert divisor_of_values(f, DunklMode.numeric(5)) == 2
    g = poly("2*t - 2*c")
    assert divisor_of_values(g, SYMBOLIC) == 2
    assert divisor_of_values(g, DunklMode.numeric(1)) == 2
    assert divisor_of_values(ActionPoly(0), SYMBOLIC) == 0


def test_divisor_of_values_rejects_non_ring_values():
    with pytest.raises(NonIntegralValues):
        divisor_of_values(poly("1/2*t + 1/2"), SYMBOLIC)


def test_divisor_oracle_agreement():
    assert check_divisor_oracle_agreement()


def test_factorization_identity():
    assert check_dunkl_binomial_factorization()


def test_saturate_examples():
    assert saturate([[2, 0], [0, 2]]) == [[1, 0], [0, 1]]
    assert saturate([[2, 4]]) == [[1, 2]]
    assert saturate([[1, 0]]) == [[1, 0]]


def test_saturate_contains_input_rows():
    rows = [[2, 4, 6], [0, 10, 4]]
    basis = saturate(rows)
    for row in rows:
        assert lattice_member(basis, row)
    # and the saturation strictly contains the primitive part
    assert lattice_member(basis, [1, 2, 3])
    assert not lattice_member(rows, [1, 2, 3])


def test_int_basis_symbolic_examples():
    lattice = int_basis("+", -1, SYMBOLIC, 4)
    assert list(lattice.generators) == [binomial_poly(k) for k in range(1, 5)]
    lattice0 = int_basis("+", 0, SYMBOLIC, 2)
    assert list(lattice0.generators) == [binomial_poly(k) for k in range(3)]


def test_int_basis_numeric_matches_specialized_symbolic():
    lattice = int_basis("+", -1, DunklMode.numeric(0), 3)
    assert list(lattice.generators) == [binomial_poly(k) for k in range(1, 4)]


def test_int_basis_numeric_needs_integral_coefficients():
    # 2c stays integral at half-integers, so the failure needs a worse c
    with pytest.raises(NonIntegralValues):
        int_basis("-", -1, DunklMode.numeric(Fraction(1, 3)), 3)


def test_int_basis_invariants():
    assert check_int_basis_valuedness()
    assert check_int_basis_maximality()
    assert check_int_basis_triangularity()


def test_int_lattice_contains():
    lattice = int_basis("+", -2, SYMBOLIC, 5)
    member = lattice.generators[0] * 3 + lattice.generators[1] * -2
    assert lattice.contains(member) == [3, -2, 0, 0]
    assert lattice.contains(binomial_poly(1)) is None


def test_truncation_precondition():
    with pytest.raises(ValueError):
        int_basis("+", -3, SYMBOLIC, 2)

from math import comb, factorial

import pytest

from dunkl.operators import d_op, e_plus
from dunkl.poly import ActionPoly, CoefPoly
from dunkl.verification import (
    check_hasse_composition_identity,
    check_hasse_pascal_columns,
    check_partial_power_divisor,
    check_tensor_implication,
    check_units_hypothesis,
    check_weyl_basis_closure,
)
from dunkl.weyl import (
    WeylOp,
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


def test_hasse_examples():
    assert hasse(0) == identity_weyl()
    assert hasse(2).act(5) == {3: CoefPoly(10)}
    assert hasse(3).act(2) == {}


def test_weyl_compose_examples():
    assert check_hasse_composition_identity()
    xp = weyl_compose(x_weyl(), partial_weyl())
    assert xp.act(7) == {7: CoefPoly(7)}
    weyl_relation = weyl_compose(partial_weyl(), x_weyl()) - weyl_compose(
        x_weyl(), partial_weyl()
    )
    assert weyl_relation == identity_weyl()


def test_weyl_dp_basis_examples():
    labels = [label for label, _ in weyl_dp_basis(1)]
    assert labels == ["1", "x", "H"]
    assert [label for label, _ in weyl_dp_basis(0)] == ["1"]
    power = identity_weyl()
    for k in range(9):
        assert weyl_divisor(power) == factorial(k)
        power = weyl_compose(partial_weyl(), power)


def test_pascal_columns():
    assert check_hasse_pascal_columns()


def test_partial_power_divisor():
    assert check_partial_power_divisor()


def test_basis_closure_integer_structure_constants():
    assert check_weyl_basis_closure()
    coords = decompose_weyl(weyl_compose(hasse(2), x_weyl(3)))
    assert coords is not None
    assert all(v.denominator == 1 for v in coords.values())


def test_decompose_weyl_rejects_laurent():
    assert decompose_weyl(WeylOp({-1: ActionPoly(1)})) is None


def test_units_hypothesis_static():
    assert check_units_hypothesis()


def test_tensor_divisor_check_examples():
    # scaled pair from both factors: the hypothesis fires and so does the conclusion
    assert tensor_divisor_check(d_op() * e_plus(), hasse(1).scale(2), 2)
    # d = 1 is always true
    assert tensor_divisor_check(e_plus(), identity_weyl(), 1)
    # d = 3 divides neither side nor the product
    assert tensor_divisor_check(e_plus(), identity_weyl(), 3)


def test_tensor_divisor_check_detects_violations():
    # gcds multiply across the tensor table, so a prime split between the two
    # factors breaks the implication: 4 | (2 x 2) but 4 divides neither factor
    de = d_op() * e_plus()  # divisor 2
    assert not tensor_divisor_check(de, hasse(1).scale(2), 4)


def test_tensor_implication_on_basis_pairs():
    assert check_tensor_implication()

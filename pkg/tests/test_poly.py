import random
from fractions import Fraction

import pytest

from dunkl.poly import (
    ActionPoly,
    CoefPoly,
    NonIntegralInput,
    binomial_poly,
    falling_product,
    from_newton,
    integer_content,
    pascal_matrix,
    to_newton,
)
from dunkl.verification import (
    _invert_matrix,
    check_content_scalar_multiplicativity,
    check_newton_evaluation_consistency,
    check_newton_roundtrip,
    check_pascal_unipotence,
    random_action_poly,
)


def poly(expr):
    from dunkl.words import as_action_poly, parse

    return as_action_poly(parse(expr))


def test_binomial_poly_examples():
    assert binomial_poly(0) == ActionPoly(1)
    assert binomial_poly(2) == poly("1/2*t^2 - 1/2*t")
    assert binomial_poly(3).eval(5) == CoefPoly(10)
    assert binomial_poly(4).degree == 4
    assert binomial_poly(4).leading() == CoefPoly(Fraction(1, 24))


def test_falling_product_examples():
    assert falling_product([]) == ActionPoly(1)
    two_t = poly("2*t")
    other = poly("2*t - 1 - 2*c")
    assert falling_product([two_t, other]) == poly("4*t^2 - 2*t - 4*c*t")
    single = poly("2*t + 1 - 2*c")
    assert falling_product([single]) == single


def test_falling_product_rejects_nonlinear():
    with pytest.raises(ValueError):
        falling_product([poly("t^2")])


def test_to_newton_examples():
    assert to_newton(poly("t^2 + t")) == [CoefPoly(0), CoefPoly(2), CoefPoly(2)]
    assert to_newton(ActionPoly(1)) == [CoefPoly(1)]
    assert to_newton(poly("2*t - 2*c")) == [CoefPoly({1: -2}), CoefPoly(2)]
    assert to_newton(ActionPoly(0)) == []


def test_from_newton_examples():
    assert from_newton([0, 2, 2]) == poly("t^2 + t")
    assert from_newton([1]) == ActionPoly(1)
    assert from_newton([0, 0, 2]) == poly("t^2 - t")


def test_integer_content_examples():
    assert integer_content(poly("4*t^2 - 2*t - 4*c*t")) == 2
    assert integer_content(ActionPoly(0)) == 0
    assert integer_content(poly("2*t + 1 - 2*c")) == 1


def test_integer_content_rejects_fractions():
    with pytest.raises(NonIntegralInput):
        integer_content(poly("1/2*t"))


def test_newton_roundtrip_property():
    assert check_newton_roundtrip()


def test_pascal_unipotence_and_integral_inverse():
    assert check_pascal_unipotence()
    inverse = _invert_matrix(pascal_matrix(6))
    assert inverse[3][2] == -3  # alternating binomial pattern
    assert inverse[3][1] == 3


def test_evaluation_consistency():
    assert check_newton_evaluation_consistency()


def test_content_multiplicativity():
    assert check_content_scalar_multiplicativity()


def test_shift_and_derivative():
    rng = random.Random(7)
    for _ in range(20):
        f = random_action_poly(rng, 6, 2, 9, denominators=(1, 2, 3))
        for j in (-3, -1, 0, 2, 5):
            g = f.shift(j)
            for t in range(6):
                assert g.eval(t) == f.eval(t + j)
        d = f.derivative()
        # product rule against a fixed factor
        h = f * poly("t + 1")
        assert h.derivative() == d * poly("t + 1") + f


def test_divexact():
    f = poly("4*t^2 - 2*t - 4*c*t")
    d = poly("2*t")
    assert f.divexact(d) == poly("2*t - 1 - 2*c")
    assert poly("2*t + 1").divexact(d) is None


def test_two_t_coordinates():
    f = poly("4*t^2 + 2*t")
    assert f.two_t_coordinates() == [CoefPoly(0), CoefPoly(1), CoefPoly(1)]


def test_canonical_zero_stripping():
    assert CoefPoly({3: 0, 1: 2}) == CoefPoly({1: 2})
    assert ActionPoly({2: 0}).is_zero
    assert (poly("t") - poly("t")).is_zero

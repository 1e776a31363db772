from fractions import Fraction

import pytest

from dunkl import words
from dunkl.verification import check_parser_roundtrip
from dunkl.words import Add, Lit, Mul, ParseError, Pow, Sub, Sym, parse, print_word


def test_commutator_parses():
    assert parse("D*x - x*D") == Sub(Mul(Sym("D"), Sym("x")), Mul(Sym("x"), Sym("D")))


def test_scaled_word_parses():
    # the operator F of the sl2 triple
    assert parse("1/2 * D^2 * e+") == Mul(
        Mul(Lit(Fraction(1, 2)), Pow(Sym("D"), 2)), Sym("e+")
    )


def test_implicit_multiplication_rejected():
    with pytest.raises(ParseError) as err:
        parse("e+ e-")
    assert err.value.position == 3
    assert "*" in err.value.expected


def test_rational_literals_allow_spaces():
    assert parse("1 / 2") == Lit(Fraction(1, 2))


def test_slash_only_between_integers():
    with pytest.raises(ParseError):
        parse("D/2")


def test_precedence():
    # ^ binds tighter than unary minus, which binds tighter than *
    assert parse("-x^2") == words.Neg(Pow(Sym("x"), 2))
    assert parse("2*-x") == Mul(Lit(Fraction(2)), words.Neg(Sym("x")))
    assert parse("x + D*s") == Add(Sym("x"), Mul(Sym("D"), Sym("s")))


def test_laurent_power():
    assert parse("x^-1") == Pow(Sym("x"), -1)


def test_e_must_bind_sign():
    with pytest.raises(ParseError):
        parse("e + 1")


def test_parse_error_offsets():
    with pytest.raises(ParseError) as err:
        parse("x + ?")
    assert err.value.position == 4


def test_unbalanced_parens():
    with pytest.raises(ParseError):
        parse("(x + D")


def test_trailing_garbage():
    with pytest.raises(ParseError):
        parse("x + ")


def test_print_parse_roundtrip_property():
    assert check_parser_roundtrip()


def test_as_action_poly():
    p = words.as_action_poly(parse("(1 - 2*c)*t^2 + 3*t - 1/2"))
    assert p.degree == 2
    assert p.eval(0).coeff(0) == Fraction(-1, 2)
    with pytest.raises(ValueError):
        words.as_action_poly(parse("x"))


def test_printed_polynomials_reparse():
    from dunkl.lattices import dunkl_poly, l_poly
    from dunkl.poly import action_poly_text

    for k in range(6):
        for sign in "+-":
            for f in (dunkl_poly(sign, k), l_poly(sign, k)):
                assert words.as_action_poly(parse(action_poly_text(f))) == f

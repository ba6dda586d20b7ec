"""Tests for the exact arithmetic kernel."""

import math
from fractions import Fraction

import pytest

from qgenocchi import exact, exceptions
from qgenocchi.exact import PolyQ, RatFn, PolyX, ZERO, ONE


##############################################################################
# Fixtures
##############################################################################

Q = PolyQ((0, 1))
ONE_MINUS_Q = PolyQ((1, -1))
ONE_PLUS_Q = PolyQ((1, 1))
ONE_PLUS_Q2 = PolyQ((1, 0, 1))


def q_ratfn(power=1):
    return RatFn.q_power(power)


##############################################################################
# PolyQ
##############################################################################

def test_polyq_strips_trailing_zeros():
    assert PolyQ((1, 2, 0, 0)).coefficients == (1, 2)


def test_polyq_zero_degree():
    assert PolyQ().degree == -math.inf
    assert PolyQ((0, 0)).is_zero


def test_polyq_arithmetic():
    assert (ONE_MINUS_Q * ONE_PLUS_Q) == PolyQ((1, 0, -1))
    assert ONE_MINUS_Q ** 2 == PolyQ((1, -2, 1))
    assert ONE_PLUS_Q - 1 == Q
    assert 1 - Q == ONE_MINUS_Q


def test_polyq_fraction_coefficients():
    p = PolyQ((Fraction(1, 2), Fraction(-1, 3)))
    assert p.coefficients == (Fraction(1, 2), Fraction(-1, 3))
    assert (p * 6) == PolyQ((3, -2))


def test_polyq_divmod():
    quo, rem = divmod(PolyQ((1, 0, 0, 1)), ONE_PLUS_Q)
    assert quo == PolyQ((1, -1, 1))
    assert rem.is_zero
    quo, rem = divmod(PolyQ((2, 0, 1)), PolyQ((0, 2)))
    assert quo == PolyQ((0, Fraction(1, 2)))
    assert rem == PolyQ((2,))


def test_polyq_divmod_by_zero():
    with pytest.raises(exceptions.DivisionByZeroError) as e:
        divmod(Q, PolyQ())
    assert e.value.args[0] == 'division by zero polynomial'


def test_polyq_exact_div():
    assert PolyQ((-1, 0, 0, 1)).exact_div(PolyQ((-2, 2))) == PolyQ(
        (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))
    )


def test_polyq_exact_div_inexact():
    with pytest.raises(exceptions.InexactDivisionError):
        PolyQ((1, 0, 1)).exact_div(ONE_PLUS_Q)


def test_polyq_evaluate():
    assert PolyQ((1, 1, 1))(Fraction(1, 2)) == Fraction(7, 4)
    assert PolyQ()(3) == 0


def test_polyq_subst_qpow():
    assert ONE_PLUS_Q.subst_qpow(3) == PolyQ((1, 0, 0, 1))


def test_polyq_negative_power():
    with pytest.raises(ValueError):
        Q ** -1


##############################################################################
# poly_gcd
##############################################################################

@pytest.mark.parametrize('a,b,expected', [
    (PolyQ((-1, 0, 1)), PolyQ((-1, 0, 0, 1)), PolyQ((-1, 1))),
    (PolyQ((2, 4)), PolyQ(), PolyQ((Fraction(1, 2), 1))),
    (PolyQ(), PolyQ((3,)), PolyQ((1,))),
    (ONE_PLUS_Q ** 2 * ONE_MINUS_Q, ONE_PLUS_Q * ONE_PLUS_Q2, ONE_PLUS_Q),
    (ONE_PLUS_Q2, ONE_PLUS_Q, PolyQ((1,))),
])
def test_poly_gcd(a, b, expected):
    assert exact.poly_gcd(a, b) == expected
    assert exact.poly_gcd(b, a) == expected


def test_poly_gcd_undefined():
    with pytest.raises(exceptions.UndefinedGcdError) as e:
        exact.poly_gcd(PolyQ(), PolyQ())
    assert e.value.args[0] == 'gcd undefined'


##############################################################################
# RatFn
##############################################################################

def test_ratfn_normalize_exact_division():
    f = exact.ratfn_normalize(PolyQ((-1, 0, 1)), PolyQ((-1, 1)))
    assert f.num == ONE_PLUS_Q
    assert f.den == PolyQ((1,))


def test_ratfn_normalize_constant_scaling():
    f = exact.ratfn_normalize(PolyQ((2, 2)), PolyQ((4,)))
    assert f.num == PolyQ((Fraction(1, 2), Fraction(1, 2)))
    assert f.den == PolyQ((1,))


def test_ratfn_normalize_zero_numerator():
    f = exact.ratfn_normalize(PolyQ(), PolyQ((5, 0, 0, 1)))
    assert f.is_zero
    assert f.den == PolyQ((1,))
    assert f == ZERO


def test_ratfn_normalize_monic_denominator():
    f = RatFn(PolyQ((1,)), PolyQ((0, 2)))
    assert f.num == PolyQ((Fraction(1, 2),))
    assert f.den == Q


def test_ratfn_normalize_zero_denominator():
    with pytest.raises(exceptions.DivisionByZeroError) as e:
        exact.ratfn_normalize(Q, PolyQ())
    assert e.value.args[0] == 'division by zero polynomial'


def test_ratfn_arith_additive_inverse():
    a = RatFn(1, ONE_MINUS_Q)
    assert exact.ratfn_arith('add', a, RatFn(-1, ONE_MINUS_Q)) == ZERO


def test_ratfn_arith_multiplicative_inverse():
    a = RatFn(ONE_PLUS_Q)
    assert exact.ratfn_arith('mul', a, RatFn(1, ONE_PLUS_Q)) == ONE


def test_ratfn_arith_pow():
    f = exact.ratfn_arith('pow', RatFn(ONE_MINUS_Q), 2)
    assert f == RatFn(PolyQ((1, -2, 1)))
    assert exact.ratfn_arith('pow', RatFn(ONE_MINUS_Q), -1) == RatFn(
        1, ONE_MINUS_Q
    )


def test_ratfn_arith_sub_and_div():
    a = RatFn(1, ONE_MINUS_Q)
    b = RatFn(1, ONE_PLUS_Q)
    assert exact.ratfn_arith('sub', a, b) == RatFn(PolyQ((0, 2)),
                                                  PolyQ((1, 0, -1)))
    assert exact.ratfn_arith('div', a, b) == RatFn(ONE_PLUS_Q, ONE_MINUS_Q)


def test_ratfn_arith_division_by_zero():
    with pytest.raises(exceptions.DivisionByZeroError):
        exact.ratfn_arith('div', ONE, ZERO)


def test_ratfn_arith_unknown_operation():
    with pytest.raises(ValueError):
        exact.ratfn_arith('mod', ONE, ONE)


def test_ratfn_sum_cancels_common_factor():
    # 1/(1-q) - q/(1-q) = 1
    f = RatFn(1, ONE_MINUS_Q) - RatFn(Q, ONE_MINUS_Q)
    assert f == ONE
    assert f.is_polynomial


def test_ratfn_mixed_operands():
    f = RatFn(1, ONE_PLUS_Q)
    assert f * 2 == RatFn(2, ONE_PLUS_Q)
    assert 1 - f == RatFn(Q, ONE_PLUS_Q)
    assert 1 / f == RatFn(ONE_PLUS_Q)


@pytest.mark.parametrize('f,q0,expected', [
    (RatFn(PolyQ((1, 1, 1))), Fraction(1, 2), Fraction(7, 4)),
    (RatFn(-Q, ONE_PLUS_Q2), Fraction(1, 2), Fraction(-2, 5)),
    (RatFn(-Q, ONE_PLUS_Q2), 2, Fraction(-2, 5)),
])
def test_ratfn_eval(f, q0, expected):
    assert exact.ratfn_eval(f, q0) == expected
    assert f(q0) == expected


def test_ratfn_eval_pole():
    with pytest.raises(exceptions.PoleError) as e:
        exact.ratfn_eval(RatFn(1, ONE_MINUS_Q), 1)
    assert e.value.args[0] == 'pole at q0'


def test_ratfn_eval_at_one():
    assert exact.ratfn_eval_at_one(RatFn(PolyQ((1, 1, 1)))) == 3
    removable = RatFn(PolyQ((-1, 0, 1)), PolyQ((-1, 1)))
    assert exact.ratfn_eval_at_one(removable) == 2


def test_ratfn_eval_at_one_pole():
    with pytest.raises(exceptions.PoleError) as e:
        exact.ratfn_eval_at_one(RatFn(-1, ONE_MINUS_Q))
    assert e.value.args[0] == 'pole at q=1'


@pytest.mark.parametrize('f,m,expected', [
    (RatFn(ONE_PLUS_Q), 3, RatFn(PolyQ((1, 0, 0, 1)))),
    (RatFn(-Q, ONE_PLUS_Q2), 2,
     RatFn(PolyQ((0, 0, -1)), PolyQ((1, 0, 0, 0, 1)))),
    (RatFn(-Q, ONE_PLUS_Q2), 1, RatFn(-Q, ONE_PLUS_Q2)),
])
def test_ratfn_subst_qpow(f, m, expected):
    assert exact.ratfn_subst_qpow(f, m) == expected


def test_ratfn_hashable():
    assert len({RatFn(ONE_PLUS_Q, PolyQ((2,))),
                RatFn(PolyQ((Fraction(1, 2), Fraction(1, 2))))}) == 1


@pytest.mark.parametrize('value,constant', [
    (PolyQ(), Fraction(0)),
    (PolyQ((3,)), Fraction(3)),
    (PolyQ((Fraction(-2, 7),)), Fraction(-2, 7)),
    (RatFn(5), Fraction(5)),
    (ZERO, Fraction(0)),
    (ONE, Fraction(1)),
    (RatFn(PolyQ((1,)), PolyQ((Fraction(1, 3),))), Fraction(3)),
    (PolyX(), Fraction(0)),
    (PolyX((ONE,)), Fraction(1)),
])
def test_constants_hash_like_fractions(value, constant):
    assert value == constant
    assert hash(value) == hash(constant)
    assert {constant: 'found'}[value] == 'found'


def test_ratfn_hash_matches_polyq():
    assert hash(RatFn(ONE_PLUS_Q)) == hash(ONE_PLUS_Q)


##############################################################################
# PolyX
##############################################################################

def test_polyx_strips_zero_coefficients():
    assert PolyX([ONE, ZERO, ZERO]).degree == 0
    assert PolyX().is_zero


@pytest.mark.parametrize('p,c,k,expected', [
    (PolyX.monomial(1), q_ratfn(), 1, PolyX.monomial(1, q_ratfn())),
    (PolyX.monomial(1), ONE, 3, PolyX.monomial(3)),
    (PolyX([ONE, ZERO, ONE]), q_ratfn(2), 1,
     PolyX([ONE, ZERO, q_ratfn(4)])),
])
def test_polyx_subst_x(p, c, k, expected):
    assert exact.polyx_subst_x(p, c, k) == expected


def test_polyx_eval_int_at_zero_sums_coefficients():
    p = PolyX([RatFn(1, ONE_MINUS_Q), q_ratfn(), ONE])
    assert exact.polyx_eval_int(p, 0) == RatFn(1, ONE_MINUS_Q) + Q + 1


def test_polyx_eval_int():
    p = PolyX([ONE, ONE])
    assert p.eval_int(2) == RatFn(ONE_PLUS_Q2)


def test_polyx_x_bracket():
    bracket = PolyX.x_bracket()
    assert bracket.eval_int(0) == ZERO
    assert bracket.eval_int(1) == ONE
    assert bracket.eval_int(2) == RatFn(ONE_PLUS_Q)


def test_polyx_arithmetic():
    x = PolyX.monomial(1)
    assert (x + 1) * (x - 1) == PolyX([-ONE, ZERO, ONE])
    assert (x + 1) ** 2 == PolyX([ONE, 2 * ONE, ONE])
    assert x * RatFn(1, ONE_PLUS_Q) == PolyX.monomial(1, RatFn(1, ONE_PLUS_Q))


def test_polyx_subst_qpow():
    p = PolyX([RatFn(1, ONE_PLUS_Q), q_ratfn()])
    assert p.subst_qpow(2) == PolyX([RatFn(1, ONE_PLUS_Q2), q_ratfn(2)])


def test_polyx_negative_power():
    with pytest.raises(ValueError) as e:
        PolyX.monomial(-1)
    assert e.value.args[0] == 'PolyX has no negative powers of X'


def test_polyx_rejects_non_rational_coefficient():
    with pytest.raises(TypeError):
        PolyX(['q'])

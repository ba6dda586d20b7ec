"""Tests for the q-brackets and the three q-families."""

from fractions import Fraction

import pytest

from qgenocchi import classical, exceptions, qfamilies
from qgenocchi.exact import (PolyQ, RatFn, PolyX, ONE, ZERO, ratfn_eval,
                             ratfn_eval_at_one)
from qgenocchi.expression import loads_ratfn
from qgenocchi.schemas import BracketQuotient, StarVariant


##############################################################################
# Brackets
##############################################################################

def test_q_int():
    assert qfamilies.q_int(0) == ZERO
    assert qfamilies.q_int(3) == RatFn(PolyQ((1, 1, 1)))
    assert qfamilies.two_q() == RatFn(PolyQ((1, 1)))


def test_q_int_signed():
    assert qfamilies.q_int_signed(3) == RatFn(PolyQ((1, -1, 1)))
    # [n]_{-q} = (1 + q^n)/(1 + q) for odd n
    assert qfamilies.q_int_signed(5) == loads_ratfn('(1+q^5)/(1+q)')


def test_q_int_limit():
    for n in range(8):
        assert ratfn_eval_at_one(qfamilies.q_int(n)) == n


@pytest.mark.parametrize('kind,m,k,expected', [
    (BracketQuotient.SIGNED, 3, 1, '1-q+q^2'),
    (BracketQuotient.SIGNED, 3, 2, '(1-q+q^2-q^3+q^4-q^5)/(1-q)'),
    (BracketQuotient.DOUBLED, 3, 1, '1-q+q^2'),
    (BracketQuotient.DOUBLED, 3, 2, '1-q^2+q^4'),
    (BracketQuotient.DOUBLED, 1, 4, '1'),
])
def test_bracket_quotient(kind, m, k, expected):
    assert qfamilies.bracket_quotient(kind, m, k) == loads_ratfn(expected)


def test_bracket_quotient_index():
    with pytest.raises(ValueError):
        qfamilies.bracket_quotient(BracketQuotient.SIGNED, 3, 0)


##############################################################################
# q-Euler
##############################################################################

@pytest.mark.parametrize('n,expected', [
    (0, '1'),
    (1, '(-q)/(1+q^2)'),
    (2, '(-q+q^3)/((1+q^2)*(1+q^3))'),
])
def test_q_euler_number(n, expected):
    assert qfamilies.q_euler_number(n) == loads_ratfn(expected)


def test_q_euler_number_at_rational():
    assert ratfn_eval(qfamilies.q_euler_number(1), Fraction(1, 2)) == \
        Fraction(-2, 5)


def test_q_euler_number_base_change():
    assert qfamilies.q_euler_number(1).subst_qpow(2) == \
        loads_ratfn('(-q^2)/(1+q^4)')


@pytest.mark.parametrize('n', range(13))
def test_q_euler_number_limit(n):
    assert (ratfn_eval_at_one(qfamilies.q_euler_number(n))
            == classical.euler_number(n))


@pytest.mark.parametrize('n', range(11))
def test_q_euler_poly_at_zero(n):
    assert qfamilies.q_euler_poly(n).eval_int(0) == \
        qfamilies.q_euler_number(n)


def test_q_euler_poly_at_one():
    assert qfamilies.q_euler_poly(1).eval_int(1) == loads_ratfn('1/(1+q^2)')


@pytest.mark.parametrize('n', range(8))
def test_q_euler_poly_difference(n):
    # q E_{n,q}(x + 1) + E_{n,q}(x) = [2]_q [x]_q^n
    poly = qfamilies.q_euler_poly(n)
    lhs = poly.subst_x(qfamilies.q_power(1), 1) * qfamilies.q_power(1) + poly
    assert lhs == PolyX.x_bracket() ** n * qfamilies.two_q()


@pytest.mark.parametrize('n', range(9))
@pytest.mark.parametrize('j', range(4))
def test_q_euler_poly_limit(n, j):
    value = qfamilies.q_euler_poly(n).eval_int(j)
    assert ratfn_eval_at_one(value) == classical.euler_poly(n)(j)


@pytest.mark.parametrize('n', range(11))
def test_q_euler_number_denominator(n):
    # the reduced denominator divides prod_{l=0}^{n} (1 + q^{l+1})
    product = PolyQ((1,))
    for l in range(n + 1):
        product = product * (PolyQ.monomial(l + 1) + 1)
    assert (product % qfamilies.q_euler_number(n).den).is_zero


##############################################################################
# q-Genocchi
##############################################################################

@pytest.mark.parametrize('n,expected', [
    (0, '0'),
    (1, '1'),
    (2, '(-2*q)/(1+q^2)'),
])
def test_q_genocchi_number(n, expected):
    assert qfamilies.q_genocchi_number(n) == loads_ratfn(expected)


def test_q_genocchi_number_at_rational():
    assert ratfn_eval(qfamilies.q_genocchi_number(2), Fraction(1, 2)) == \
        Fraction(-4, 5)


def test_q_genocchi_number_without_two_bracket():
    assert (qfamilies.q_genocchi_number(1, two_bracket=False)
            == loads_ratfn('1/(1+q)'))


@pytest.mark.parametrize('n', range(13))
def test_q_genocchi_number_limit(n):
    assert (ratfn_eval_at_one(qfamilies.q_genocchi_number(n))
            == classical.genocchi_number(n))


@pytest.mark.parametrize('n', range(1, 9))
def test_q_genocchi_poly_from_euler(n):
    assert qfamilies.q_genocchi_poly(n) == qfamilies.genocchi_from_euler(n)


@pytest.mark.parametrize('n', range(9))
def test_q_genocchi_poly_has_no_constant_term(n):
    assert qfamilies.q_genocchi_poly(n).coefficient(0).is_zero


@pytest.mark.parametrize('n', range(1, 9))
def test_q_genocchi_poly_at_zero(n):
    assert qfamilies.q_genocchi_poly(n).eval_int(0) == \
        qfamilies.q_genocchi_number(n)


def test_genocchi_from_euler_index():
    with pytest.raises(ValueError):
        qfamilies.genocchi_from_euler(0)


##############################################################################
# q-Bernoulli
##############################################################################

@pytest.mark.parametrize('n,expected', [
    (0, '1'),
    (1, '-1/(1-q)'),
    (2, '(-2*q)/((1-q)*(1-q^2))'),
])
def test_q_bernoulli_number(n, expected):
    assert qfamilies.q_bernoulli_number(n) == loads_ratfn(expected)


def test_q_bernoulli_number_at_rational():
    assert ratfn_eval(qfamilies.q_bernoulli_number(2), Fraction(1, 2)) == \
        Fraction(-8, 3)


@pytest.mark.parametrize('n', range(1, 6))
def test_q_bernoulli_number_pole_at_one(n):
    with pytest.raises(exceptions.PoleError) as e:
        ratfn_eval_at_one(qfamilies.q_bernoulli_number(n))
    assert e.value.args[0] == 'pole at q=1'


##############################################################################
# Star operation
##############################################################################

@pytest.mark.parametrize('variant', list(StarVariant))
@pytest.mark.parametrize('n', range(1, 5))
def test_star_apply_trivial_base_change(variant, n):
    f = qfamilies.q_euler_number(n)
    assert qfamilies.star_apply(variant, 1, n, f).is_zero


def test_star_apply_euler():
    f = qfamilies.q_euler_number(2)
    expected = (qfamilies.q_int_signed(3) * f
                - qfamilies.q_int(3) ** 2
                * qfamilies.bracket_quotient(BracketQuotient.SIGNED, 3, 3)
                * f.subst_qpow(3))
    assert qfamilies.star_apply(StarVariant.EULER, 3, 2, f) == expected


def test_star_apply_genocchi_offset():
    f = qfamilies.q_genocchi_number(2)
    expected = (qfamilies.two_q().subst_qpow(3) * qfamilies.q_int(3) * f
                - qfamilies.two_q() * qfamilies.q_int(3) ** 2
                * qfamilies.bracket_quotient(BracketQuotient.DOUBLED, 3, 2)
                * f.subst_qpow(3))
    assert qfamilies.star_apply(StarVariant.GENOCCHI, 3, 2, f,
                                offset=0) == expected


def test_star_apply_polyx():
    f = qfamilies.q_euler_poly(1)
    assert qfamilies.star_apply(StarVariant.EULER, 1, 1, f).is_zero


def test_star_apply_even_m():
    with pytest.raises(exceptions.ParityError) as e:
        qfamilies.star_apply(StarVariant.EULER, 2, 1, ONE)
    assert e.value.args[0] == 'm must be odd'

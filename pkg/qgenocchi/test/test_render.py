"""Tests for plain, LaTeX and JSON rendering."""

from fractions import Fraction

import pytest

from qgenocchi import qfamilies, render
from qgenocchi.classical import XPoly
from qgenocchi.exact import PolyQ, RatFn, PolyX, ONE, ZERO
from qgenocchi.schemas import OutputFormat


E1 = RatFn(PolyQ((0, -1)), PolyQ((1, 0, 1)))


@pytest.mark.parametrize('value,expected', [
    (Fraction(-3), '-3'),
    (Fraction(1, 2), '1/2'),
    (PolyQ(), '0'),
    (PolyQ((1, -2, 1)), '1-2*q+q^2'),
    (PolyQ((0, 0, Fraction(1, 2))), '1/2*q^2'),
    (PolyQ((0, Fraction(-3, 4))), '-3/4*q'),
    (XPoly((Fraction(-1, 2), 1)), '-1/2+x'),
    (ONE, '1'),
    (E1, '(-q)/(1+q^2)'),
    (PolyX(), '0'),
    (PolyX([ONE, ZERO, RatFn.q_power(1)]), '(1)+(q)*X^2'),
    (PolyX.monomial(1, E1), '((-q)/(1+q^2))*X'),
])
def test_to_plain(value, expected):
    assert render.to_plain(value) == expected


@pytest.mark.parametrize('value,expected', [
    (Fraction(-1, 2), '-\\frac{1}{2}'),
    (Fraction(4), '4'),
    (PolyQ((0, Fraction(1, 2))), '\\frac{1}{2}q'),
    (PolyQ((1, 0, -1)), '1-q^{2}'),
    (E1, '\\frac{-q}{1+q^{2}}'),
    (PolyX([ONE, ONE]), '\\left(1\\right)+\\left(1\\right)X'),
])
def test_to_latex(value, expected):
    assert render.to_latex(value) == expected


def test_to_plain_unsupported():
    with pytest.raises(TypeError):
        render.to_plain('q')


def test_rat_to_json_always_has_denominator():
    assert render.rat_to_json(Fraction(3)) == '3/1'
    assert render.rat_to_json(Fraction(-2, 4)) == '-1/2'


@pytest.mark.parametrize('input_', ['0.5', 1, None, '1/q'])
def test_rat_from_json_invalid(input_):
    with pytest.raises(ValueError):
        render.rat_from_json(input_)


def test_to_json_ratfn():
    assert render.to_json(E1) == {
        'num': ['0/1', '-1/1'],
        'den': ['1/1', '0/1', '1/1'],
    }


def test_to_json_polyx():
    assert render.to_json(PolyX.monomial(1)) == [
        {'num': [], 'den': ['1/1']},
        {'num': ['1/1'], 'den': ['1/1']},
    ]


@pytest.mark.parametrize('value', [
    Fraction(-17, 8),
    qfamilies.q_euler_number(3),
    qfamilies.q_genocchi_poly(3),
])
def test_value_from_json(value):
    assert render.value_from_json(render.to_json(value)) == value


def test_ratfn_from_json_malformed():
    with pytest.raises(ValueError):
        render.ratfn_from_json({'num': ['1/1']})


def test_render_by_format():
    assert render.render(E1, OutputFormat.PLAIN) == '(-q)/(1+q^2)'
    assert render.render(E1, OutputFormat.LATEX) == '\\frac{-q}{1+q^{2}}'
    assert render.render(Fraction(1, 2), OutputFormat.JSON) == '"1/2"'


def test_render_unsupported_format():
    with pytest.raises(ValueError):
        render.render(E1, OutputFormat.CSV)

"""Text renderings of exact values: plain, LaTeX and JSON.

The plain format is what qgenocchi.expression parses. The JSON form keeps
every rational as an exact "num/den" string.
"""

import functools
import json
import numbers
from fractions import Fraction

from qgenocchi import exact
from qgenocchi.schemas import OutputFormat


##############################################################################
# Plain
##############################################################################


def _plain_term(coefficient, variable, power):
    """Render one term with its sign as a (sign, body) pair."""
    sign = '-' if coefficient < 0 else '+'
    magnitude = abs(coefficient)
    if power == 0:
        return sign, str(magnitude)
    var = variable if power == 1 else '{}^{}'.format(variable, power)
    if magnitude == 1:
        return sign, var
    return sign, '{}*{}'.format(magnitude, var)


def _join_terms(terms):
    if not terms:
        return '0'
    first_sign, first = terms[0]
    parts = ['-' + first if first_sign == '-' else first]
    for sign, body in terms[1:]:
        parts.append(sign + body)
    return ''.join(parts)


@functools.singledispatch
def to_plain(value):
    """Render a value in the plain format."""
    raise TypeError('Cannot render {!r}'.format(value))


@to_plain.register(numbers.Rational)
def _(value):
    return str(Fraction(value))


@to_plain.register(exact.PolyQ)
def _(value):
    return _join_terms([
        _plain_term(c, value.VARIABLE, i)
        for i, c in enumerate(value.coefficients) if c
    ])


@to_plain.register(exact.RatFn)
def _(value):
    num = to_plain(value.num)
    if value.is_polynomial:
        # den is the constant 1 in canonical form
        return num
    return '({})/({})'.format(num, to_plain(value.den))


@to_plain.register(exact.PolyX)
def _(value):
    terms = []
    for i, c in enumerate(value.coefficients):
        if c.is_zero:
            continue
        body = '({})'.format(to_plain(c))
        if i == 1:
            body += '*X'
        elif i > 1:
            body += '*X^{}'.format(i)
        terms.append(body)
    return '+'.join(terms) if terms else '0'


##############################################################################
# LaTeX
##############################################################################


def _latex_rat(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    sign = '-' if value < 0 else ''
    return '{}\\frac{{{}}}{{{}}}'.format(sign, abs(value.numerator),
                                         value.denominator)


@functools.singledispatch
def to_latex(value):
    """Render a value as a LaTeX math fragment."""
    raise TypeError('Cannot render {!r}'.format(value))


@to_latex.register(numbers.Rational)
def _(value):
    return _latex_rat(value)


@to_latex.register(exact.PolyQ)
def _(value):
    terms = []
    for i, c in enumerate(value.coefficients):
        if not c:
            continue
        sign = '-' if c < 0 else '+'
        magnitude = abs(c)
        if i == 0:
            body = _latex_rat(magnitude)
        else:
            var = (value.VARIABLE if i == 1
                   else '{}^{{{}}}'.format(value.VARIABLE, i))
            body = var if magnitude == 1 else _latex_rat(magnitude) + var
        terms.append((sign, body))
    return _join_terms(terms)


@to_latex.register(exact.RatFn)
def _(value):
    if value.is_polynomial:
        return to_latex(value.num)
    return '\\frac{{{}}}{{{}}}'.format(to_latex(value.num),
                                       to_latex(value.den))


@to_latex.register(exact.PolyX)
def _(value):
    terms = []
    for i, c in enumerate(value.coefficients):
        if c.is_zero:
            continue
        body = '\\left({}\\right)'.format(to_latex(c))
        if i == 1:
            body += 'X'
        elif i > 1:
            body += 'X^{{{}}}'.format(i)
        terms.append(body)
    return '+'.join(terms) if terms else '0'


##############################################################################
# JSON
##############################################################################


def rat_to_json(value):
    value = Fraction(value)
    return '{}/{}'.format(value.numerator, value.denominator)


def rat_from_json(string):
    """Parse an exact "num/den" string.

    Raises ValueError on anything else.
    """
    if not isinstance(string, str) or '.' in string:
        raise ValueError('Expected exact rational string but got {!r}'
                         .format(string))
    return Fraction(string)


@functools.singledispatch
def to_json(value):
    """Return a JSON-serializable structure for a value."""
    raise TypeError('Cannot render {!r}'.format(value))


@to_json.register(numbers.Rational)
def _(value):
    return rat_to_json(value)


@to_json.register(exact.PolyQ)
def _(value):
    return [rat_to_json(c) for c in value.coefficients]


@to_json.register(exact.RatFn)
def _(value):
    return {'num': to_json(value.num), 'den': to_json(value.den)}


@to_json.register(exact.PolyX)
def _(value):
    return [to_json(c) for c in value.coefficients]


def polyq_from_json(obj):
    return exact.PolyQ(rat_from_json(c) for c in obj)


def ratfn_from_json(obj):
    """Rebuild a RatFn from its JSON object.

    Raises ValueError if the object is malformed.
    """
    try:
        num, den = obj['num'], obj['den']
    except (KeyError, TypeError):
        raise ValueError('Expected object with num and den but got {!r}'
                         .format(obj))
    return exact.RatFn(polyq_from_json(num), polyq_from_json(den))


def polyx_from_json(obj):
    return exact.PolyX(ratfn_from_json(c) for c in obj)


def value_from_json(obj):
    """Rebuild a Rat, RatFn or PolyX from any JSON form above."""
    if isinstance(obj, str):
        return rat_from_json(obj)
    if isinstance(obj, dict):
        return ratfn_from_json(obj)
    if isinstance(obj, list):
        return polyx_from_json(obj)
    raise ValueError('Unrecognized JSON value {!r}'.format(obj))


def dumps(obj):
    """Serialize deterministically."""
    return json.dumps(obj, sort_keys=True)


##############################################################################
# Dispatch by format
##############################################################################


def render(value, output_format):
    """Render a value as text in the given OutputFormat."""
    if output_format is OutputFormat.PLAIN:
        return to_plain(value)
    elif output_format is OutputFormat.LATEX:
        return to_latex(value)
    elif output_format is OutputFormat.JSON:
        return dumps(to_json(value))
    raise ValueError('Unsupported format {!r}'.format(output_format))

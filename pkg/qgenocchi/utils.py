"""Parsing of exact values given as text on the command line or in config."""

import re
from fractions import Fraction

_RATIONAL_RE = re.compile(r'^[+-]?\d+(/\d+)?$')
_RANGE_RE = re.compile(r'^(-?\d+)\.\.(-?\d+)$')


def parse_rational(text):
    """Parse "a/b" (optional sign, optional denominator) into a Fraction.

    Decimal input is rejected so that no value is silently inexact.

    Raises ValueError if the text is not of that form or b is zero.
    """
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError('Expected rational a/b but got {!r}'.format(text))
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValueError('Zero denominator in {!r}'.format(text))


def parse_assignment(text, name):
    """Parse "name=value" and return value.

    Raises ValueError if the name does not match.
    """
    key, sep, value = text.partition('=')
    if not sep or key.strip() != name:
        raise ValueError('Expected {}=<value> but got {!r}'.format(name, text))
    return value.strip()


def parse_int_list(text):
    """Parse a comma list of integers and inclusive a..b ranges.

    "1..3,7" gives (1, 2, 3, 7). An a..b range with b < a is empty.

    Raises ValueError on malformed items.
    """
    values = []
    for item in text.split(','):
        item = item.strip()
        if not item:
            raise ValueError('Empty item in {!r}'.format(text))
        match = _RANGE_RE.match(item)
        if match:
            values.extend(range(int(match.group(1)), int(match.group(2)) + 1))
            continue
        try:
            values.append(int(item))
        except ValueError:
            raise ValueError('Expected integer or range but got {!r}'
                             .format(item))
    return tuple(values)


def parse_params(text):
    """Parse "n=1..4,m=1,3" into {'n': (1, 2, 3, 4), 'm': (1, 3)}.

    A comma starts a new parameter only when followed by "name=".

    Raises ValueError on malformed input.
    """
    params = {}
    for chunk in re.split(r',(?=\s*[A-Za-z_]\w*\s*=)', text.strip()):
        name, sep, ranges = chunk.partition('=')
        name = name.strip()
        if not sep or not re.match(r'^[A-Za-z_]\w*$', name):
            raise ValueError('Expected name=<ranges> but got {!r}'
                             .format(chunk))
        if name in params:
            raise ValueError('Parameter {!r} given twice'.format(name))
        params[name] = parse_int_list(ranges)
    return params

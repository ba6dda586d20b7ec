"""Rigorous numeric check of closed forms against the defining series.

Each series is summed exactly in rationals up to an index L and bounded
geometrically beyond it, so the returned Enclosure certainly contains the
series value. The bound uses 0 < [k]_q < 1/(1-q) for 0 < q < 1:

    q-Euler     (1+q) q^L / (1-q)^(n+1)
    q-Genocchi  n (1+q) q^L / (1-q)^n
    q-Bernoulli n q^L / (1-q)^n

L is the least index whose bound is at most the tolerance.
"""

import collections
import logging
from fractions import Fraction

from qgenocchi import exceptions, qfamilies
from qgenocchi.exact import ratfn_eval
from qgenocchi.schemas import Family

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = Fraction(1, 10 ** 25)
DEFAULT_QS = (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3))
DEFAULT_XS = (0, 1, 2, 3)
DEFAULT_MAX_N = 8

Enclosure = collections.namedtuple('Enclosure', ['lo', 'hi'])

OracleRecord = collections.namedtuple('OracleRecord', [
    'family', 'n', 'x', 'q', 'lo', 'hi', 'closed_value', 'contained'
])

ArbitrationVerdict = collections.namedtuple('ArbitrationVerdict', [
    'two_bracket',  # whether the closed form carries the [2]_q factor
    'passed',  # every grid point contained
    'first_miss',  # (n, x, q) of the first point not contained, or None
])


def enclosure_contains(enclosure, value):
    return enclosure.lo <= value <= enclosure.hi


def _enclosures_meet(a, b):
    return a.lo <= b.hi and b.lo <= a.hi


def _check_domain(q0, tol):
    if not isinstance(q0, (int, Fraction)) or not 0 < q0 < 1:
        raise exceptions.OracleDomainError(
            'oracle requires rational q in (0,1)'
        )
    if tol <= 0:
        raise ValueError('tolerance must be positive, got {}'.format(tol))
    return Fraction(q0), Fraction(tol)


def _bracket_value(k, q0):
    return (1 - q0 ** k) / (1 - q0)


def _truncation_index(bound_at_zero, q0, tol):
    """Return (L, bound) for the least L with bound_at_zero * q0^L <= tol."""
    index, bound = 0, bound_at_zero
    while bound > tol:
        index += 1
        bound *= q0
    return index, bound


def _partial_sum(term, length):
    return sum((term(l) for l in range(length)), Fraction(0))


def _euler_term(n, x, q0):
    two = 1 + q0

    def term(l):
        return two * (-q0) ** l * _bracket_value(l + x, q0) ** n
    return term


def series_q_euler(n, x, q0, tol=DEFAULT_TOLERANCE):
    """Enclose E_{n,q}(x) = [2]_q sum_l (-1)^l q^l [l+x]_q^n at q = q0.

    Raises OracleDomainError unless 0 < q0 < 1.
    """
    q0, tol = _check_domain(q0, tol)
    if n < 0 or x < 0:
        raise ValueError('n and x must be non-negative')
    index, bound = _truncation_index(
        (1 + q0) / (1 - q0) ** (n + 1), q0, tol
    )
    total = _partial_sum(_euler_term(n, x, q0), index)
    enclosure = Enclosure(total - bound, total + bound)
    logger.debug('q-euler n={} x={} q={}: {} terms'.format(n, x, q0, index))
    assert _enclosures_meet(enclosure, alternating_bracket(n, x, q0, index))
    return enclosure


def series_q_genocchi(n, x, q0, tol=DEFAULT_TOLERANCE):
    """Enclose G_{n,q}(x) = n [2]_q sum_l (-1)^l q^(l+x) [l+x]_q^(n-1).

    Raises OracleDomainError unless 0 < q0 < 1.
    """
    q0, tol = _check_domain(q0, tol)
    if n < 1 or x < 0:
        raise ValueError('n must be positive and x non-negative')
    index, bound = _truncation_index(
        n * (1 + q0) / (1 - q0) ** n, q0, tol
    )
    two = 1 + q0

    def term(l):
        return (n * two * (-1) ** l * q0 ** (l + x)
                * _bracket_value(l + x, q0) ** (n - 1))
    total = _partial_sum(term, index)
    logger.debug('q-genocchi n={} x={} q={}: {} terms'
                 .format(n, x, q0, index))
    return Enclosure(total - bound, total + bound)


def series_q_bernoulli(n, q0, tol=DEFAULT_TOLERANCE):
    """Enclose B_{n,q} = -n sum_l q^l [l]_q^(n-1).

    Raises OracleDomainError unless 0 < q0 < 1.
    """
    q0, tol = _check_domain(q0, tol)
    if n < 1:
        raise ValueError('n must be positive, got {}'.format(n))
    index, bound = _truncation_index(n / (1 - q0) ** n, q0, tol)

    def term(l):
        return -n * q0 ** l * _bracket_value(l, q0) ** (n - 1)
    total = _partial_sum(term, index)
    logger.debug('q-bernoulli n={} q={}: {} terms'.format(n, q0, index))
    return Enclosure(total - bound, total + bound)


def alternating_bracket(n, x, q0, length=0):
    """Bracket E_{n,q0}(x) between two consecutive partial sums.

    From the first nonzero term j >= length whose successor is no larger in
    magnitude, all later terms decrease, so the value lies between the
    partial sums of j and j + 1 terms.
    """
    q0 = Fraction(q0)
    term = _euler_term(n, x, q0)
    total = _partial_sum(term, length)
    j = length
    current = term(j)
    while True:
        following = term(j + 1)
        if current != 0 and abs(following) <= abs(current):
            break
        total += current
        current = following
        j += 1
    after = total + current
    return Enclosure(min(total, after), max(total, after))


##############################################################################
# Closed form checks
##############################################################################


def closed_value(family, n, x, q0, two_bracket=True):
    """Evaluate the closed form of a q-family at integer x and q = q0."""
    family = Family(family)
    if family is Family.Q_EULER:
        value = qfamilies.q_euler_poly(n).eval_int(x)
    elif family is Family.Q_GENOCCHI:
        value = qfamilies.q_genocchi_poly(n, two_bracket).eval_int(x)
    elif family is Family.Q_BERNOULLI:
        if x != 0:
            raise ValueError('q-bernoulli has no polynomial form')
        value = qfamilies.q_bernoulli_number(n)
    else:
        raise ValueError('oracle has no series for {}'.format(family.value))
    return ratfn_eval(value, q0)


def enclose(family, n, x, q0, tol=DEFAULT_TOLERANCE):
    """Return the series Enclosure for a q-family."""
    family = Family(family)
    if family is Family.Q_EULER:
        return series_q_euler(n, x, q0, tol)
    elif family is Family.Q_GENOCCHI:
        return series_q_genocchi(n, x, q0, tol)
    elif family is Family.Q_BERNOULLI:
        if x != 0:
            raise ValueError('q-bernoulli has no polynomial form')
        return series_q_bernoulli(n, q0, tol)
    raise ValueError('oracle has no series for {}'.format(family.value))


def check_closed_form(family, n, x, q0, tol=DEFAULT_TOLERANCE,
                      two_bracket=True):
    """Compare a closed form with its series enclosure.

    Raises OracleDomainError unless 0 < q0 < 1.
    """
    family = Family(family)
    enclosure = enclose(family, n, x, q0, tol)
    value = closed_value(family, n, x, Fraction(q0), two_bracket)
    contained = enclosure_contains(enclosure, value)
    if not contained:
        logger.info('{} n={} x={} q={}: closed form {} outside enclosure'
                    .format(family.value, n, x, q0, value))
    return OracleRecord(family, n, x, Fraction(q0), enclosure.lo,
                        enclosure.hi, value, contained)


def _grid(family, max_n, xs):
    family = Family(family)
    first_n = 0 if family is Family.Q_EULER else 1
    if family is Family.Q_BERNOULLI:
        xs = (0,)
    for n in range(first_n, max_n + 1):
        for x in xs:
            yield n, x


def sweep(families=(Family.Q_EULER, Family.Q_GENOCCHI, Family.Q_BERNOULLI),
          max_n=DEFAULT_MAX_N, xs=DEFAULT_XS, qs=DEFAULT_QS,
          tol=DEFAULT_TOLERANCE, two_bracket=True):
    """Check closed forms over a grid; return OracleRecords in grid order.

    q-Euler starts at n = 0, the others at n = 1; q-Bernoulli uses x = 0.
    """
    records = []
    for family in families:
        for n, x in _grid(family, max_n, xs):
            for q0 in qs:
                records.append(check_closed_form(family, n, x, q0, tol,
                                                 two_bracket))
    return records


def arbitrate_genocchi(max_n=DEFAULT_MAX_N, xs=DEFAULT_XS, qs=DEFAULT_QS,
                       tol=DEFAULT_TOLERANCE):
    """Decide between the q-Genocchi closed forms with and without [2]_q.

    Returns one ArbitrationVerdict per form, with the [2]_q form first.
    """
    verdicts = []
    for two_bracket in (True, False):
        first_miss = None
        for record in sweep((Family.Q_GENOCCHI,), max_n, xs, qs, tol,
                            two_bracket):
            if not record.contained:
                first_miss = (record.n, record.x, record.q)
                break
        verdicts.append(ArbitrationVerdict(two_bracket, first_miss is None,
                                           first_miss))
        logger.info('q-genocchi closed form with two_bracket={}: {}'
                    .format(two_bracket,
                            'passed' if first_miss is None else
                            'missed at {}'.format(first_miss)))
    return verdicts

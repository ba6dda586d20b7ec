"""q-brackets, q-Euler, q-Genocchi and q-Bernoulli families.

Every infinite sum of the generating functions is summed in closed form
before anything is computed:

    sum_k (-1)^k q^(k(l+1)) = 1/(1 + q^(l+1))
    sum_k q^(k(j+1))        = 1/(1 - q^(j+1))

so the numbers are finite sums of RatFn values and the polynomials are
PolyX values in X = q^x.
"""

import functools
import logging
from math import comb

from qgenocchi import exceptions
from qgenocchi.exact import PolyQ, PolyX, RatFn, ZERO, ONE
from qgenocchi.schemas import BracketQuotient, StarVariant
from qgenocchi.settings import MEMO_CAP

logger = logging.getLogger(__name__)


def _check_index(n):
    if n < 0:
        raise ValueError('index must be non-negative, got {}'.format(n))


##############################################################################
# Brackets
##############################################################################


def q_power(k):
    """Return q^k."""
    return RatFn.q_power(k)


@functools.lru_cache(maxsize=MEMO_CAP)
def q_int(n):
    """Return [n]_q = 1 + q + ... + q^(n-1)."""
    _check_index(n)
    return RatFn(PolyQ([1] * n))


@functools.lru_cache(maxsize=MEMO_CAP)
def q_int_signed(n):
    """Return [n]_{-q} = (1 - (-q)^n)/(1 + q) = 1 - q + ... + (-q)^(n-1)."""
    _check_index(n)
    return RatFn(PolyQ([(-1) ** i for i in range(n)]))


def two_q():
    """Return [2]_q = 1 + q."""
    return q_int(2)


def _one_plus_qpow(k):
    return RatFn(PolyQ.monomial(k) + 1)


def _one_minus_qpow(k):
    return RatFn(1 - PolyQ.monomial(k))


@functools.lru_cache(maxsize=MEMO_CAP)
def _inv_one_minus_q_pow(n):
    """Return (1/(1 - q))^n."""
    return _one_minus_qpow(1) ** (-n)


def bracket_quotient(kind, m, k):
    """Return the bracket quotient for base power m at index k.

    SIGNED is [mk]_{-q}/[k]_{-q}; DOUBLED is [2]_{q^(mk)}/[2]_{q^k}.
    """
    kind = BracketQuotient(kind)
    if k < 1:
        raise ValueError('bracket index must be positive, got {}'.format(k))
    if kind is BracketQuotient.SIGNED:
        return q_int_signed(m * k) / q_int_signed(k)
    return _one_plus_qpow(m * k) / _one_plus_qpow(k)


##############################################################################
# q-Euler
##############################################################################


def _euler_terms(n):
    """Yield C(n,l)(-1)^l/(1 + q^(l+1)) for l = 0..n."""
    for l in range(n + 1):
        yield _one_plus_qpow(l + 1).inverse() * ((-1) ** l * comb(n, l))


@functools.lru_cache(maxsize=MEMO_CAP)
def q_euler_number(n):
    """Return E_{n,q}, the value of E_{n,q}(x) at x = 0."""
    _check_index(n)
    total = ZERO
    for term in _euler_terms(n):
        total = total + term
    return total * two_q() * _inv_one_minus_q_pow(n)


@functools.lru_cache(maxsize=MEMO_CAP)
def q_euler_poly(n):
    """Return E_{n,q}(x) as a PolyX in X = q^x.

    The coefficient of X^l is [2]_q C(n,l)(-1)^l/((1-q)^n (1+q^(l+1))).
    """
    _check_index(n)
    scale = two_q() * _inv_one_minus_q_pow(n)
    return PolyX(term * scale for term in _euler_terms(n))


##############################################################################
# q-Genocchi
##############################################################################


def _genocchi_scale(n, two_bracket):
    scale = _inv_one_minus_q_pow(n - 1) * n
    if two_bracket:
        scale = scale * two_q()
    return scale


@functools.lru_cache(maxsize=MEMO_CAP)
def q_genocchi_number(n, two_bracket=True):
    """Return G_{n,q}.

    two_bracket=False drops the [2]_q factor, which gives G_{1,q} =
    1/(1+q) instead of the generating-function value 1.
    """
    _check_index(n)
    if n == 0:
        return ZERO
    total = ZERO
    for term in _euler_terms(n - 1):
        total = total + term
    return total * _genocchi_scale(n, two_bracket)


@functools.lru_cache(maxsize=MEMO_CAP)
def q_genocchi_poly(n, two_bracket=True):
    """Return G_{n,q}(x) as a PolyX with no constant term.

    The coefficient of X^(j+1) is
    n [2]_q C(n-1,j)(-1)^j/((1-q)^(n-1) (1+q^(j+1))).
    """
    _check_index(n)
    if n == 0:
        return PolyX()
    scale = _genocchi_scale(n, two_bracket)
    return PolyX([ZERO] + [term * scale for term in _euler_terms(n - 1)])


def genocchi_from_euler(n):
    """Return n q^x E_{n-1,q}(x), which equals G_{n,q}(x) for n >= 1."""
    if n < 1:
        raise ValueError('index must be positive, got {}'.format(n))
    return q_euler_poly(n - 1) * PolyX.monomial(1) * n


##############################################################################
# q-Bernoulli
##############################################################################


@functools.lru_cache(maxsize=MEMO_CAP)
def q_bernoulli_number(n):
    """Return B_{n,q}; B_{0,q} is 1 by convention.

    For n >= 1 the value has a pole at q = 1.
    """
    _check_index(n)
    if n == 0:
        return ONE
    total = ZERO
    for j in range(n):
        term = _one_minus_qpow(j + 1).inverse()
        total = total + term * ((-1) ** j * comb(n - 1, j))
    return total * _inv_one_minus_q_pow(n - 1) * (-n)


##############################################################################
# Star operation
##############################################################################


def star_apply(variant, m, n, f, quotient=None, offset=1):
    """Apply the star operation to f = f_n(q).

    euler:    [m]_{-q} f(q) - [m]_q^n Q f(q^m)
    genocchi: [2]_{q^m} [m]_q f(q) - [2]_q [m]_q^n Q f(q^m)

    Q is bracket_quotient(quotient, m, n + offset); the default quotient is
    SIGNED for euler and DOUBLED for genocchi. f may be a RatFn or PolyX.

    Raises ParityError if m is even.
    """
    variant = StarVariant(variant)
    if m < 1:
        raise ValueError('m must be positive, got {}'.format(m))
    if m % 2 == 0:
        raise exceptions.ParityError('m must be odd')
    if quotient is None:
        quotient = (BracketQuotient.SIGNED if variant is StarVariant.EULER
                    else BracketQuotient.DOUBLED)
    base_changed = f.subst_qpow(m)
    coefficient = q_int(m) ** n * bracket_quotient(quotient, m, n + offset)
    if variant is StarVariant.EULER:
        return f * q_int_signed(m) - base_changed * coefficient
    return (f * (_one_plus_qpow(m) * q_int(m))
            - base_changed * (coefficient * two_q()))

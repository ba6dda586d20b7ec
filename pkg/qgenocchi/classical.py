"""Classical Euler, Genocchi and Bernoulli numbers and polynomials.

E_n are the values E_n(0) of the generating function 2/(e^t + 1), so
E_1 = -1/2. Genocchi numbers are G_n = n * E_{n-1} with G_0 = 0.
"""

import functools
import logging
from fractions import Fraction
from math import comb

from qgenocchi import exact
from qgenocchi.settings import MEMO_CAP

logger = logging.getLogger(__name__)


class XPoly(exact.PolyQ):

    """A polynomial in x with rational coefficients."""

    __slots__ = ()
    VARIABLE = 'x'

    def compose_affine(self, a, b):
        """Return p(a + b*x)."""
        inner = XPoly((a, b))
        result = XPoly()
        for c in reversed(self.coefficients):
            result = result * inner + c
        return result


def _check_index(n):
    if n < 0:
        raise ValueError('index must be non-negative, got {}'.format(n))


@functools.lru_cache(maxsize=MEMO_CAP)
def _euler_numbers(n):
    """Return (E_0, ..., E_n) from sum_k C(n,k) E_k + E_n = 0."""
    values = [Fraction(1)]
    for i in range(1, n + 1):
        total = sum(comb(i, k) * values[k] for k in range(i))
        values.append(-total / 2)
    return tuple(values)


@functools.lru_cache(maxsize=MEMO_CAP)
def _bernoulli_numbers(n):
    """Return (B_0, ..., B_n) from sum_{k<=n} C(n+1,k) B_k = 0."""
    values = [Fraction(1)]
    for i in range(1, n + 1):
        total = sum(comb(i + 1, k) * values[k] for k in range(i))
        values.append(-total / (i + 1))
    return tuple(values)


def euler_number(n):
    _check_index(n)
    return _euler_numbers(n)[n]


def euler_poly(n):
    """Return E_n(x) = sum_k C(n,k) E_k x^(n-k)."""
    _check_index(n)
    numbers = _euler_numbers(n)
    return XPoly(comb(n, n - i) * numbers[n - i] for i in range(n + 1))


def genocchi_number(n):
    _check_index(n)
    if n == 0:
        return Fraction(0)
    return n * euler_number(n - 1)


def genocchi_poly(n):
    """Return G_n(x) = sum_k C(n,k) G_k x^(n-k)."""
    _check_index(n)
    return XPoly(comb(n, n - i) * genocchi_number(n - i)
                 for i in range(n + 1))


def bernoulli_number(n):
    """Return B_n with B_1 = -1/2."""
    _check_index(n)
    return _bernoulli_numbers(n)[n]


def alt_power_sum(m, n):
    """Return Z_m(n) = 1^m - 2^m + ... + (-1)^(n+1) n^m."""
    _check_index(m)
    _check_index(n)
    return Fraction(sum((-1) ** (i + 1) * i ** m for i in range(1, n + 1)))

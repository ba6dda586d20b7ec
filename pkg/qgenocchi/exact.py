"""Exact arithmetic kernel: rationals, polynomials in q, rational functions.

Rationals are fractions.Fraction. PolyQ is a dense polynomial in q; its
coefficients are stored as integers over one positive common denominator,
which keeps multiplication and the gcd in integer arithmetic. RatFn is a
reduced quotient of two PolyQ with a monic denominator, so equality is a
structural comparison. PolyX is a polynomial in the abstract variable
X = q^x whose coefficients are RatFn.

All values are immutable.
"""

import functools
import logging
import math
import numbers
import operator
from fractions import Fraction

from qgenocchi import exceptions

logger = logging.getLogger(__name__)

Rat = Fraction
ZERO_DEGREE = -math.inf


##############################################################################
# Integer coefficient helpers
##############################################################################


def _gcd_all(values, start=0):
    return functools.reduce(math.gcd, values, start)


def _lcm(a, b):
    return a // math.gcd(a, b) * b


def _strip(ints):
    """Drop trailing zero coefficients."""
    ints = list(ints)
    while ints and ints[-1] == 0:
        ints.pop()
    return ints


def _primitive_ints(ints):
    """Divide out the content so the leading coefficient is positive."""
    g = _gcd_all(ints)
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def _int_prem(a, b):
    """Pseudo-remainder of integer coefficient lists a by b."""
    rem = list(a)
    nb = len(b)
    lb = b[-1]
    while len(rem) >= nb:
        lr = rem[-1]
        g = math.gcd(lr, lb)
        sa, sb = lb // g, lr // g
        shift = len(rem) - nb
        rem = [c * sa for c in rem]
        for i, c in enumerate(b):
            rem[shift + i] -= sb * c
        rem = _strip(rem)
    return rem


def _int_exact_div(a, b):
    """Quotient of integer coefficient lists, which must divide exactly."""
    rem = list(a)
    nb = len(b)
    lb = b[-1]
    quo = [0] * max(len(a) - nb + 1, 0)
    for shift in reversed(range(len(quo))):
        c, r = divmod(rem[shift + nb - 1], lb)
        if r:
            raise exceptions.InexactDivisionError(
                'inexact polynomial division'
            )
        quo[shift] = c
        if c:
            for i, d in enumerate(b):
                rem[shift + i] -= c * d
    if any(rem):
        raise exceptions.InexactDivisionError('inexact polynomial division')
    return quo


##############################################################################
# PolyQ
##############################################################################


class PolyQ(object):

    """A univariate polynomial with rational coefficients.

    Coefficients are indexed by power. The zero polynomial has no
    coefficients and degree ZERO_DEGREE.
    """

    __slots__ = ('_ints', '_denom')
    VARIABLE = 'q'

    def __init__(self, coefficients=()):
        """Create a polynomial from coefficients in ascending powers."""
        fracs = [Fraction(c) for c in coefficients]
        denom = 1
        for c in fracs:
            denom = _lcm(denom, c.denominator)
        self._set([c.numerator * (denom // c.denominator) for c in fracs],
                  denom)

    def _set(self, ints, denom):
        ints = _strip(ints)
        if denom < 0:
            ints, denom = [-c for c in ints], -denom
        if not ints:
            denom = 1
        else:
            g = math.gcd(_gcd_all(ints), denom)
            if g > 1:
                ints = [c // g for c in ints]
                denom //= g
        self._ints = tuple(ints)
        self._denom = denom

    @classmethod
    def _from_ints(cls, ints, denom=1):
        poly = cls.__new__(cls)
        poly._set(ints, denom)
        return poly

    @classmethod
    def constant(cls, value):
        return cls((value,))

    @classmethod
    def monomial(cls, power, coefficient=1):
        """Return coefficient * var^power."""
        if power < 0:
            raise ValueError('negative power {}'.format(power))
        return cls([0] * power + [coefficient])

    @property
    def coefficients(self):
        """Coefficients as Fractions, constant term first."""
        return tuple(Fraction(c, self._denom) for c in self._ints)

    @property
    def degree(self):
        if not self._ints:
            return ZERO_DEGREE
        return len(self._ints) - 1

    @property
    def is_zero(self):
        return not self._ints

    @property
    def leading(self):
        if not self._ints:
            return Fraction(0)
        return Fraction(self._ints[-1], self._denom)

    def coefficient(self, power):
        if 0 <= power < len(self._ints):
            return Fraction(self._ints[power], self._denom)
        return Fraction(0)

    def _coerce(self, other):
        if type(other) is type(self):
            return other
        if isinstance(other, numbers.Rational):
            return type(self).constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._ints, other._ints
        denom = _lcm(self._denom, other._denom)
        sa, sb = denom // self._denom, denom // other._denom
        ints = [0] * max(len(a), len(b))
        for i, c in enumerate(a):
            ints[i] += c * sa
        for i, c in enumerate(b):
            ints[i] += c * sb
        return self._from_ints(ints, denom)

    __radd__ = __add__

    def __neg__(self):
        return self._from_ints([-c for c in self._ints], self._denom)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._ints, other._ints
        if not a or not b:
            return self._from_ints((), 1)
        ints = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    ints[i + j] += x * y
        return self._from_ints(ints, self._denom * other._denom)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, numbers.Integral) or exponent < 0:
            raise ValueError('polynomial exponent must be a non-negative '
                             'integer, got {}'.format(exponent))
        result = type(self).constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __divmod__(self, other):
        """Euclidean division over the rationals."""
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise exceptions.DivisionByZeroError(
                'division by zero polynomial'
            )
        rem = list(self.coefficients)
        div = other.coefficients
        lead = div[-1]
        quo = [Fraction(0)] * max(len(rem) - len(div) + 1, 0)
        for shift in reversed(range(len(quo))):
            c = rem[shift + len(div) - 1] / lead
            quo[shift] = c
            if c:
                for i, d in enumerate(div):
                    rem[shift + i] -= c * d
        return type(self)(quo), type(self)(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        """Return self / other where other divides self exactly.

        Raises InexactDivisionError otherwise.
        """
        if other.is_zero:
            raise exceptions.DivisionByZeroError(
                'division by zero polynomial'
            )
        if self.is_zero:
            return self
        ca, pa = self._primitive()
        cb, pb = other._primitive()
        return self._from_ints(_int_exact_div(pa, pb), 1).scale(ca / cb)

    def _primitive(self):
        """Return (content, primitive integer coefficients)."""
        prim = _primitive_ints(self._ints)
        return Fraction(self._ints[-1], prim[-1] * self._denom), prim

    def scale(self, factor):
        """Multiply every coefficient by a rational factor."""
        factor = Fraction(factor)
        return self._from_ints([c * factor.numerator for c in self._ints],
                               self._denom * factor.denominator)

    def monic(self):
        if self.is_zero:
            return self
        return self._from_ints(self._ints, self._ints[-1])

    def subst_qpow(self, m):
        """Return the polynomial with its variable raised to the power m."""
        if m < 1:
            raise ValueError('base power must be positive, got {}'.format(m))
        if m == 1 or len(self._ints) <= 1:
            return self
        ints = [0] * ((len(self._ints) - 1) * m + 1)
        for i, c in enumerate(self._ints):
            ints[i * m] = c
        return self._from_ints(ints, self._denom)

    def __call__(self, value):
        """Evaluate exactly at a rational value."""
        value = Fraction(value)
        if not self._ints:
            return Fraction(0)
        a, b = value.numerator, value.denominator
        acc = 0
        bpow = 1
        for c in reversed(self._ints):
            acc = acc * a + c * bpow
            bpow *= b
        return Fraction(acc, bpow // b * self._denom)

    def __eq__(self, other):
        if isinstance(other, numbers.Rational):
            other = type(self).constant(other)
        if type(other) is not type(self):
            return NotImplemented
        return self._ints == other._ints and self._denom == other._denom

    def __hash__(self):
        # constants hash like the equal Fraction
        if self.degree <= 0:
            return hash(self.coefficient(0))
        return hash((type(self).__name__, self._ints, self._denom))

    def __repr__(self):
        return '{}({!r})'.format(type(self).__name__,
                                 [str(c) for c in self.coefficients])


def poly_gcd(a, b):
    """Return the monic greatest common divisor of two polynomials.

    Uses the Euclidean algorithm on primitive integer parts, dividing out
    the content after every pseudo-remainder.

    Raises UndefinedGcdError if both are zero.
    """
    if a.is_zero and b.is_zero:
        raise exceptions.UndefinedGcdError('gcd undefined')
    if b.is_zero:
        return a.monic()
    if a.is_zero:
        return b.monic()
    cls = type(a)
    pa = a._primitive()[1]
    pb = b._primitive()[1]
    if len(pa) < len(pb):
        pa, pb = pb, pa
    steps = 0
    while pb:
        if len(pb) == 1:
            return cls.constant(1)
        rem = _int_prem(pa, pb)
        pa, pb = pb, (_primitive_ints(rem) if rem else [])
        steps += 1
    if logger.isEnabledFor(logging.DEBUG):
        logger.debug('gcd of degrees {} and {} has degree {} after {} steps'
                     .format(a.degree, b.degree, len(pa) - 1, steps))
    return cls._from_ints(pa, pa[-1])


def _cancel(a, b):
    """Divide a and b by their gcd; b is monic and stays monic."""
    if a.is_zero or b.degree < 1 or a.degree < 1:
        return a, b
    g = poly_gcd(a, b)
    if g.degree < 1:
        return a, b
    return a.exact_div(g), b.exact_div(g)


##############################################################################
# RatFn
##############################################################################


def _as_ratfn(value):
    if isinstance(value, RatFn):
        return value
    if isinstance(value, PolyQ):
        return RatFn._make(value, _ONE_POLY)
    if isinstance(value, numbers.Rational):
        return RatFn._make(PolyQ.constant(value), _ONE_POLY)
    return NotImplemented


class RatFn(object):

    """A rational function num/den in q in canonical form.

    gcd(num, den) = 1, den is monic, and zero is 0/1.
    """

    __slots__ = ('_num', '_den')

    def __init__(self, num, den=1):
        """Create the canonical form of num/den.

        Raises DivisionByZeroError if den is the zero polynomial.
        """
        if not isinstance(num, PolyQ):
            num = PolyQ.constant(num)
        if not isinstance(den, PolyQ):
            den = PolyQ.constant(den)
        if den.is_zero:
            raise exceptions.DivisionByZeroError(
                'division by zero polynomial'
            )
        if num.is_zero:
            self._num, self._den = num, _ONE_POLY
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        lead = den.leading
        self._num = num.scale(1 / lead)
        self._den = den.scale(1 / lead)

    @classmethod
    def _make(cls, num, den):
        """Wrap num/den already known to be coprime with den monic."""
        fn = cls.__new__(cls)
        if num.is_zero:
            den = _ONE_POLY
        fn._num, fn._den = num, den
        return fn

    @classmethod
    def q_power(cls, power):
        return cls._make(PolyQ.monomial(power), _ONE_POLY)

    @property
    def num(self):
        return self._num

    @property
    def den(self):
        return self._den

    @property
    def is_zero(self):
        return self._num.is_zero

    @property
    def is_polynomial(self):
        return self._den.degree == 0

    def __add__(self, other):
        other = _as_ratfn(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        a, b, c, d = self._num, self._den, other._num, other._den
        if b == d:
            g = b
        elif b.degree == 0 or d.degree == 0:
            g = _ONE_POLY
        else:
            g = poly_gcd(b, d)
        if g.degree == 0:
            return RatFn._make(a * d + c * b, b * d)
        b1, d1 = b.exact_div(g), d.exact_div(g)
        t = a * d1 + c * b1
        if t.is_zero:
            return ZERO
        t, g2 = _cancel(t, g)
        if g2 != g:
            d = d.exact_div(g.exact_div(g2))
        # t/(b1 * d) with d reduced by the same factor as g
        return RatFn._make(t, b1 * d)

    __radd__ = __add__

    def __neg__(self):
        return RatFn._make(-self._num, self._den)

    def __sub__(self, other):
        other = _as_ratfn(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_ratfn(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ZERO
        a, b = _cancel(self._num, other._den)
        c, d = _cancel(other._num, self._den)
        return RatFn._make(a * c, d * b)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero:
            raise exceptions.DivisionByZeroError(
                'division by zero rational function'
            )
        scale = 1 / self._num.leading
        return RatFn._make(self._den.scale(scale), self._num.scale(scale))

    def __truediv__(self, other):
        other = _as_ratfn(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent):
        if not isinstance(exponent, numbers.Integral):
            raise ValueError('exponent must be an integer, got {}'
                             .format(exponent))
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RatFn._make(self._num ** exponent, self._den ** exponent)

    def __call__(self, q0):
        return ratfn_eval(self, q0)

    def subst_qpow(self, m):
        """Return the function with q replaced by q^m.

        Coprimality survives the substitution, so no gcd is needed.
        """
        return RatFn._make(self._num.subst_qpow(m), self._den.subst_qpow(m))

    def __eq__(self, other):
        other = _as_ratfn(other)
        if other is NotImplemented:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        if self._den.degree == 0:
            return hash(self._num)
        return hash(('RatFn', self._num, self._den))

    def __repr__(self):
        return 'RatFn({!r}, {!r})'.format(self._num, self._den)


_ONE_POLY = PolyQ.constant(1)
ZERO = RatFn._make(PolyQ(), _ONE_POLY)
ONE = RatFn._make(_ONE_POLY, _ONE_POLY)


##############################################################################
# PolyX
##############################################################################


class PolyX(object):

    """A polynomial in X = q^x with RatFn coefficients.

    Only non-negative powers of X occur.
    """

    __slots__ = ('_coeffs',)

    def __init__(self, coefficients=()):
        coeffs = []
        for c in coefficients:
            c = _as_ratfn(c)
            if c is NotImplemented:
                raise TypeError('PolyX coefficient must be a RatFn')
            coeffs.append(c)
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, value):
        return cls((value,))

    @classmethod
    def monomial(cls, power, coefficient=1):
        if power < 0:
            raise ValueError('PolyX has no negative powers of X')
        return cls([ZERO] * power + [coefficient])

    @classmethod
    def x_bracket(cls):
        """Return [x]_q = (1 - X)/(1 - q)."""
        inv = RatFn(1, PolyQ((1, -1)))
        return cls((inv, -inv))

    @property
    def coefficients(self):
        return self._coeffs

    @property
    def degree(self):
        if not self._coeffs:
            return ZERO_DEGREE
        return len(self._coeffs) - 1

    @property
    def is_zero(self):
        return not self._coeffs

    def coefficient(self, power):
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return ZERO

    def _coerce(self, other):
        if isinstance(other, PolyX):
            return other
        other = _as_ratfn(other)
        if other is NotImplemented:
            return NotImplemented
        return PolyX((other,))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        size = max(len(self._coeffs), len(other._coeffs))
        return PolyX(self.coefficient(i) + other.coefficient(i)
                     for i in range(size))

    __radd__ = __add__

    def __neg__(self):
        return PolyX(-c for c in self._coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, PolyX):
            scalar = _as_ratfn(other)
            if scalar is NotImplemented:
                return NotImplemented
            return PolyX(c * scalar for c in self._coeffs)
        if self.is_zero or other.is_zero:
            return PolyX()
        coeffs = [ZERO] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other._coeffs):
                if not b.is_zero:
                    coeffs[i + j] = coeffs[i + j] + a * b
        return PolyX(coeffs)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, numbers.Integral) or exponent < 0:
            raise ValueError('PolyX exponent must be a non-negative integer')
        result = PolyX.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def subst_x(self, c, k):
        """Substitute X -> c * X^k and collect powers."""
        if k < 0:
            raise ValueError('PolyX has no negative powers of X')
        c = _as_ratfn(c)
        if self.is_zero:
            return self
        coeffs = [ZERO] * ((len(self._coeffs) - 1) * k + 1)
        factor = ONE
        for i, coeff in enumerate(self._coeffs):
            if not coeff.is_zero:
                coeffs[i * k] = coeffs[i * k] + coeff * factor
            factor = factor * c
        return PolyX(coeffs)

    def eval_int(self, j):
        """Evaluate at integer x = j, that is X = q^j."""
        if j < 0:
            raise ValueError('evaluation point must be non-negative')
        total = ZERO
        for i, coeff in enumerate(self._coeffs):
            if not coeff.is_zero:
                total = total + coeff * RatFn.q_power(i * j)
        return total

    def subst_qpow(self, m):
        """Replace q by q^m in every coefficient."""
        return PolyX(c.subst_qpow(m) for c in self._coeffs)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        if len(self._coeffs) <= 1:
            return hash(self.coefficient(0))
        return hash(('PolyX', self._coeffs))

    def __repr__(self):
        return 'PolyX({!r})'.format(list(self._coeffs))


##############################################################################
# Operations
##############################################################################


def ratfn_normalize(num, den):
    """Return the canonical reduced form of num/den."""
    return RatFn(num, den)


_ARITH_OPS = {
    'add': operator.add,
    'sub': operator.sub,
    'mul': operator.mul,
    'div': operator.truediv,
    'pow': operator.pow,
}


def ratfn_arith(op, a, b):
    """Apply a field operation; b is an integer exponent for 'pow'.

    Raises DivisionByZeroError on division by zero.
    """
    try:
        func = _ARITH_OPS[op]
    except KeyError:
        raise ValueError('unknown operation {!r}'.format(op))
    if op != 'pow':
        b = _as_ratfn(b)
    return func(_as_ratfn(a), b)


def ratfn_eval(f, q0):
    """Evaluate f exactly at a rational q0.

    Raises PoleError if the reduced denominator vanishes at q0.
    """
    q0 = Fraction(q0)
    den = f.den(q0)
    if den == 0:
        raise exceptions.PoleError('pole at q0')
    return f.num(q0) / den


def ratfn_eval_at_one(f):
    """Return the limit q -> 1 of f as the value of its reduced form.

    Raises PoleError if q = 1 is a genuine pole.
    """
    den = f.den(1)
    if den == 0:
        raise exceptions.PoleError('pole at q=1')
    return f.num(1) / den


def ratfn_subst_qpow(f, m):
    return f.subst_qpow(m)


def polyx_subst_x(p, c, k):
    """Substitute X -> c * X^k in p (x -> x + a is c = q^a, k = 1)."""
    return p.subst_x(c, k)


def polyx_eval_int(p, j):
    return p.eval_int(j)

"""Catalog and exact verification of the q-Euler and q-Genocchi identities.

Each catalog entry is an IdentitySpec with integer parameters and one or
more variants. A variant builds the two sides of the identity from the
qgenocchi.qfamilies and qgenocchi.classical operations; verify subtracts
them and reports whether the difference is identically zero.

Variants named "as-printed" follow the statement as it is usually quoted.
Where exact computation refutes that statement a minimally edited variant
is cataloged next to it, with a note naming the first counterexample.
"""

import asyncio
import collections
import concurrent.futures
import functools
import itertools
import logging
import time
from fractions import Fraction
from math import comb

from qgenocchi import classical, exceptions, oracle, qfamilies, render
from qgenocchi.event import Event
from qgenocchi.exact import ONE, ZERO, PolyX
from qgenocchi.schemas import BracketQuotient, Family, StarVariant

logger = logging.getLogger(__name__)

AS_PRINTED = 'as-printed'
PARITY_IDS = ('EQ12', 'PROP1', 'EQ24', 'EQ25_FINAL')
SPOT_POINTS = (0, 1, 2)
ORACLE_Q = Fraction(1, 2)
ORACLE_XS = (0, 1, 2, 3)

Param = collections.namedtuple('Param', ['name', 'default', 'odd'])

Variant = collections.namedtuple('Variant', [
    'name', 'build', 'expected_to_hold', 'note'
])

IdentitySpec = collections.namedtuple('IdentitySpec', [
    'id_', 'params', 'variants', 'anchor'
])

IdentityReport = collections.namedtuple('IdentityReport', [
    'id_',
    'variant',
    'params',  # dict of parameter values in declaration order
    'holds_exact',
    'difference',  # plain rendering of rhs - lhs, or the unevaluable reason
    'elapsed',  # seconds
    'expected',  # whether the variant is expected to hold everywhere
    'oracle',  # closed-form oracle verdict, or None
    'spot_checks',  # zero tests at X = q^j for PolyX identities, or None
    'anchor',  # the statement as usually quoted
    'note',  # what the variant changes, and where it breaks
])

Erratum = collections.namedtuple('Erratum', [
    'id_', 'variant', 'note', 'first_failure'
])

ParityVerdict = collections.namedtuple('ParityVerdict', [
    'id_', 'variant', 'parity', 'holds', 'count'
])


##############################################################################
# Shared pieces
##############################################################################


def _two_base(m):
    """Return [2]_{q^m}."""
    return qfamilies.two_q().subst_qpow(m)


def _residue_sum(base, m, k, weight):
    """Return sum_a (-1)^a weight(a) base(X -> q^a X^k) over a = 0..m-1."""
    total = PolyX()
    for a in range(m):
        term = base.subst_x(qfamilies.q_power(a), k) * weight(a)
        total = total + term if a % 2 == 0 else total - term
    return total


def _unweighted(a):
    return ONE


def _shift_weight(k):
    """Return the weight a -> q^a X^k."""
    def weight(a):
        return PolyX.monomial(k, qfamilies.q_power(a))
    return weight


def _power_sum_weight(m, n, k, shift):
    """Return sum_a (-1)^a q^(a(k+shift)) [a]_q^(n-k) for k < n.

    The a = 0 term vanishes because [0]_q = 0.
    """
    total = ZERO
    for a in range(1, m):
        term = (qfamilies.q_power(a * (k + shift))
                * qfamilies.q_int(a) ** (n - k))
        total = total + term if a % 2 == 0 else total - term
    return total


##############################################################################
# Classical identities
##############################################################################


def _eq5(m):
    lhs = classical.euler_poly(m)
    rhs = classical.XPoly()
    for k in range(m + 1):
        coefficient = (comb(m, k) * classical.genocchi_number(k + 1)
                       / (k + 1))
        rhs = rhs + classical.XPoly.monomial(m - k, coefficient)
    return lhs, rhs


def _eq6(m, n):
    lhs = (n ** m - n) * classical.genocchi_number(m)
    rhs = sum((comb(m, k) * n ** k * classical.genocchi_number(k)
               * classical.alt_power_sum(m - k, n - 1)
               for k in range(1, m)), Fraction(0))
    return lhs, rhs


##############################################################################
# q-Euler identities
##############################################################################


def _eq10_dist(n, m):
    lhs = qfamilies.q_euler_poly(n)
    base = qfamilies.q_euler_poly(n).subst_qpow(m)
    scale = qfamilies.two_q() / _two_base(m) * qfamilies.q_int(m) ** n
    rhs = _residue_sum(base, m, 1, qfamilies.q_power) * scale
    return lhs, rhs


def _eq10_add(n):
    lhs = qfamilies.q_euler_poly(n)
    bracket = PolyX.x_bracket()
    rhs = PolyX()
    for k in range(n + 1):
        rhs = rhs + (bracket ** (n - k) * PolyX.monomial(k)
                     * (qfamilies.q_euler_number(k) * comb(n, k)))
    return lhs, rhs


def _eq11(n, m):
    lhs = qfamilies.q_euler_poly(n).subst_x(ONE, m) * _two_base(m)
    base = qfamilies.q_euler_poly(n).subst_qpow(m)
    scale = qfamilies.two_q() * qfamilies.q_int(m) ** n
    rhs = _residue_sum(base, m, m, qfamilies.q_power) * scale
    return lhs, rhs


def _eq12_rhs(n, m):
    total = ZERO
    for l in range(n):
        total = total + (qfamilies.q_euler_number(l).subst_qpow(m)
                         * qfamilies.q_int(m) ** l
                         * _power_sum_weight(m, n, l, 1) * comb(n, l))
    return total


def _eq12(n, m, quotient):
    euler = qfamilies.q_euler_number(n)
    lhs = (qfamilies.q_int_signed(m) * euler
           - qfamilies.q_int(m) ** n
           * qfamilies.bracket_quotient(quotient, m, n + 1)
           * euler.subst_qpow(m))
    return lhs, _eq12_rhs(n, m)


def _prop1(n, m, quotient):
    lhs = qfamilies.star_apply(StarVariant.EULER, m, n,
                               qfamilies.q_euler_number(n), quotient=quotient)
    return lhs, _eq12_rhs(n, m)


def _prop2(n, m, sign):
    lhs = ZERO
    for l in range(n):
        term = qfamilies.q_power(l) * qfamilies.q_int(l) ** m
        lhs = lhs + term if l % 2 == 0 else lhs - term
    shifted = (qfamilies.q_euler_poly(m).eval_int(n) * qfamilies.q_power(n)
               * (-1) ** (n + 1))
    rhs = (shifted + qfamilies.q_euler_number(m) * sign) / qfamilies.two_q()
    return lhs, rhs


##############################################################################
# q-Genocchi identities
##############################################################################


def _eq17(n):
    bernoulli = qfamilies.q_bernoulli_number(n)
    two = qfamilies.two_q()
    lhs = qfamilies.q_genocchi_number(n)
    rhs = two * bernoulli - two ** n * bernoulli.subst_qpow(2) * 2
    return lhs, rhs


def _thm3a(n, two_bracket):
    return (qfamilies.q_genocchi_poly(n, two_bracket),
            qfamilies.genocchi_from_euler(n))


def _eq21(n, corrected):
    lhs = qfamilies.q_euler_poly(n)
    bracket = PolyX.x_bracket()
    rhs = PolyX()
    for k in range(n + 1):
        j = k if corrected else n
        number = qfamilies.q_genocchi_number(j + 1) / (j + 1)
        rhs = rhs + (bracket ** (n - k) * PolyX.monomial(j)
                     * (number * comb(n, k)))
    return lhs, rhs


def _genocchi_dist_scale(n, m):
    return qfamilies.two_q() / _two_base(m) * qfamilies.q_int(m) ** (n - 1)


def _thm4_dist(n, m, weighted):
    lhs = qfamilies.q_genocchi_poly(n)
    base = qfamilies.q_genocchi_poly(n).subst_qpow(m)
    weight = _shift_weight(1) if weighted else _unweighted
    rhs = _residue_sum(base, m, 1, weight)
    return lhs, rhs * _genocchi_dist_scale(n, m)


def _thm4_add(n, infinite):
    if infinite:
        raise exceptions.UnevaluableError(
            'inner sum runs to infinity'
        )
    lhs = qfamilies.q_genocchi_poly(n)
    bracket = PolyX.x_bracket()
    rhs = PolyX()
    for k in range(n + 1):
        rhs = rhs + (bracket ** (n - k) * PolyX.monomial(k)
                     * (qfamilies.q_genocchi_number(k) * comb(n, k)))
    return lhs, rhs


def _eq23(n, m, weighted):
    lhs = qfamilies.q_genocchi_poly(n).subst_x(ONE, m)
    base = qfamilies.q_genocchi_poly(n).subst_qpow(m)
    weight = _shift_weight(m) if weighted else _unweighted
    rhs = _residue_sum(base, m, m, weight)
    return lhs, rhs * _genocchi_dist_scale(n, m)


def _genocchi_star_rhs(n, m, shift, inner_index_is_k):
    total = ZERO
    for k in range(n):
        index = k if inner_index_is_k else n
        total = total + (qfamilies.q_genocchi_number(index).subst_qpow(m)
                         * qfamilies.q_int(m) ** k
                         * _power_sum_weight(m, n, k, shift) * comb(n, k))
    return total * qfamilies.two_q()


def _eq24(n, m, quotient, offset, shift):
    genocchi = qfamilies.q_genocchi_number(n)
    lhs = (_two_base(m) * qfamilies.q_int(m) * genocchi
           - qfamilies.two_q() * qfamilies.q_int(m) ** n
           * qfamilies.bracket_quotient(quotient, m, n + offset)
           * genocchi.subst_qpow(m))
    return lhs, _genocchi_star_rhs(n, m, shift, True)


def _eq25_final(n, m, offset, shift, inner_index_is_k):
    lhs = qfamilies.star_apply(StarVariant.GENOCCHI, m, n,
                               qfamilies.q_genocchi_number(n), offset=offset)
    return lhs, _genocchi_star_rhs(n, m, shift, inner_index_is_k)


##############################################################################
# Catalog
##############################################################################

_N_EULER = tuple(range(0, 9))
_N_GENOCCHI = tuple(range(1, 9))
_N_STAR = tuple(range(1, 7))
_M_ODD = (1, 3, 5)


def _holds(build, note=''):
    return Variant(AS_PRINTED, build, True, note)


_CATALOG = (
    IdentitySpec(
        'EQ5', (Param('m', tuple(range(0, 11)), False),),
        (_holds(_eq5),),
        'E_m(x) = sum_k C(m,k) G_{k+1}/(k+1) x^{m-k}',
    ),
    IdentitySpec(
        'EQ6', (Param('m', tuple(range(1, 11)), False),
                Param('n', (1, 3, 5, 7), True)),
        (_holds(_eq6),),
        '(n^m - n) G_m = sum_{k=1}^{m-1} C(m,k) n^k G_k Z_{m-k}(n-1)',
    ),
    IdentitySpec(
        'EQ10_DIST', (Param('n', _N_EULER, False), Param('m', _M_ODD, True)),
        (_holds(_eq10_dist),),
        'E_{n,q}(x) = [2]_q/[2]_{q^m} [m]_q^n sum_a (-1)^a q^a '
        'E_{n,q^m}((a+x)/m)',
    ),
    IdentitySpec(
        'EQ10_ADD', (Param('n', _N_EULER, False),),
        (_holds(_eq10_add),),
        'E_{n,q}(x) = sum_k C(n,k) [x]_q^{n-k} q^{kx} E_{k,q}',
    ),
    IdentitySpec(
        'EQ11', (Param('n', _N_EULER, False), Param('m', _M_ODD, True)),
        (_holds(_eq11),),
        '[2]_{q^m} E_{n,q}(mx) = [2]_q [m]_q^n sum_a (-1)^a q^a '
        'E_{n,q^m}(a/m + x)',
    ),
    IdentitySpec(
        'EQ12', (Param('n', _N_STAR, False), Param('m', _M_ODD, True)),
        (
            Variant(AS_PRINTED,
                    functools.partial(_eq12, quotient=BracketQuotient.SIGNED),
                    False,
                    'signed quotient [m(n+1)]_{-q}/[n+1]_{-q}; holds for even '
                    'n only, first fails at (n=1, m=3)'),
            Variant('corrected',
                    functools.partial(_eq12,
                                      quotient=BracketQuotient.DOUBLED),
                    True,
                    'quotient [2]_{q^{m(n+1)}}/[2]_{q^{n+1}}'),
        ),
        '[m]_{-q} E_{n,q} - [m]_q^n Q E_{n,q^m} = sum_{l<n} C(n,l) [m]_q^l '
        'E_{l,q^m} sum_{a=1}^{m-1} (-1)^a q^{a(l+1)} [a]_q^{n-l}',
    ),
    IdentitySpec(
        'PROP1', (Param('n', _N_STAR, False), Param('m', _M_ODD, True)),
        (
            Variant(AS_PRINTED,
                    functools.partial(_prop1,
                                      quotient=BracketQuotient.SIGNED),
                    False,
                    'star operation with the signed quotient; holds for even '
                    'n only, first fails at (n=1, m=3)'),
            Variant('corrected',
                    functools.partial(_prop1,
                                      quotient=BracketQuotient.DOUBLED),
                    True,
                    'star operation with [2]_{q^{m(n+1)}}/[2]_{q^{n+1}}'),
        ),
        '(1 - [m]_q^n) * E_{n,q} = sum_{l<n} C(n,l) [m]_q^l E_{l,q^m} '
        'sum_{a=1}^{m-1} (-1)^a q^{a(l+1)} [a]_q^{n-l}',
    ),
    IdentitySpec(
        'PROP2', (Param('n', tuple(range(1, 9)), False),
                  Param('m', tuple(range(1, 9)), False)),
        (
            Variant(AS_PRINTED, functools.partial(_prop2, sign=-1), False,
                    'fails at (n=1, m=1) with difference '
                    '2q/((1+q)(1+q^2))'),
            Variant('sign-corrected', functools.partial(_prop2, sign=1),
                    True, '+E_{m,q} in place of -E_{m,q}'),
        ),
        'sum_{l<n} (-1)^l q^l [l]_q^m = ((-1)^{n+1} q^n E_{m,q}(n) '
        '- E_{m,q}) / [2]_q',
    ),
    IdentitySpec(
        'EQ17', (Param('n', tuple(range(1, 11)), False),),
        (_holds(_eq17),),
        'G_{n,q} = [2]_q B_{n,q} - 2 [2]_q^n B_{n,q^2}',
    ),
    IdentitySpec(
        'THM3A', (Param('n', _N_GENOCCHI, False),),
        (
            Variant(AS_PRINTED,
                    functools.partial(_thm3a, two_bracket=False), False,
                    'closed form without [2]_q; fails at n=1 where it gives '
                    'G_{1,q}(x) = q^x/(1+q)'),
            Variant('corrected',
                    functools.partial(_thm3a, two_bracket=True), True,
                    'closed form with the factor [2]_q'),
        ),
        'G_{n,q}(x) = n (1/(1-q))^{n-1} sum_l C(n-1,l) (-1)^l/(1+q^{l+1}) '
        'q^{(l+1)x}',
    ),
    IdentitySpec(
        'EQ21', (Param('n', _N_EULER, False),),
        (
            Variant(AS_PRINTED, functools.partial(_eq21, corrected=False),
                    False, 'q^{nx} G_{n+1,q}/(n+1); fails at n=1'),
            Variant('corrected', functools.partial(_eq21, corrected=True),
                    True, 'q^{kx} G_{k+1,q}/(k+1) inside the sum'),
        ),
        'E_{n,q}(x) = sum_k C(n,k) [x]_q^{n-k} q^{nx} G_{n+1,q}/(n+1)',
    ),
    IdentitySpec(
        'THM4_DIST', (Param('n', _N_GENOCCHI, False),
                      Param('m', _M_ODD, True)),
        (
            Variant(AS_PRINTED,
                    functools.partial(_thm4_dist, weighted=True), False,
                    'extra weight q^{a+x}; fails at (n=1, m=1)'),
            Variant('corrected',
                    functools.partial(_thm4_dist, weighted=False), True,
                    'weight q^{a+x} removed'),
        ),
        'G_{n,q}(x) = [2]_q/[2]_{q^m} [m]_q^{n-1} sum_a (-1)^a q^{a+x} '
        'G_{n,q^m}((x+a)/m)',
    ),
    IdentitySpec(
        'THM4_ADD', (Param('n', _N_GENOCCHI, False),),
        (
            Variant(AS_PRINTED,
                    functools.partial(_thm4_add, infinite=True), False,
                    'upper limit infinity is not computable as written'),
            Variant('corrected',
                    functools.partial(_thm4_add, infinite=False), True,
                    'upper limit n'),
        ),
        'G_{n,q}(x) = sum_{k=0}^{infinity} C(n,k) q^{kx} G_{k,q} '
        '[x]_q^{n-k}',
    ),
    IdentitySpec(
        'EQ23', (Param('n', _N_GENOCCHI, False), Param('m', _M_ODD, True)),
        (
            Variant(AS_PRINTED, functools.partial(_eq23, weighted=True),
                    False, 'extra weight q^{a+mx}; fails at (n=1, m=1)'),
            Variant('corrected', functools.partial(_eq23, weighted=False),
                    True, 'weight q^{a+mx} removed'),
        ),
        'G_{n,q}(mx) = [2]_q/[2]_{q^m} [m]_q^{n-1} sum_a (-1)^a q^{a+mx} '
        'G_{n,q^m}(x + a/m)',
    ),
    IdentitySpec(
        'EQ24', (Param('n', _N_STAR, False), Param('m', _M_ODD, True)),
        (
            Variant(AS_PRINTED,
                    functools.partial(_eq24, quotient=BracketQuotient.DOUBLED,
                                      offset=1, shift=1),
                    False, 'bracket index n+1 and weight q^{a(k+1)}; fails '
                    'at (n=1, m=3)'),
            Variant('signed-quotient',
                    functools.partial(_eq24, quotient=BracketQuotient.SIGNED,
                                      offset=1, shift=1),
                    False, 'signed quotient at index n+1; fails at '
                    '(n=1, m=3)'),
            Variant('corrected',
                    functools.partial(_eq24, quotient=BracketQuotient.DOUBLED,
                                      offset=0, shift=0),
                    True, 'bracket index n and weight q^{ak}'),
        ),
        '[2]_{q^m} [m]_q G_{n,q} - [2]_q [m]_q^n G_{n,q^m} '
        '[2]_{q^{m(n+1)}}/[2]_{q^{n+1}} = [2]_q sum_{k<n} C(n,k) [m]_q^k '
        'G_{k,q^m} sum_a (-1)^a q^{a(k+1)} [a]_q^{n-k}',
    ),
    IdentitySpec(
        'EQ25_FINAL', (Param('n', _N_STAR, False), Param('m', _M_ODD, True)),
        (
            Variant(AS_PRINTED,
                    functools.partial(_eq25_final, offset=1, shift=1,
                                      inner_index_is_k=False),
                    False, 'G_{n,q^m} inside the k-sum; fails at (n=1, m=3)'),
            Variant('k-index',
                    functools.partial(_eq25_final, offset=1, shift=1,
                                      inner_index_is_k=True),
                    False, 'G_{k,q^m} inside the k-sum; fails at '
                    '(n=1, m=3)'),
            Variant('corrected',
                    functools.partial(_eq25_final, offset=0, shift=0,
                                      inner_index_is_k=True),
                    True, 'G_{k,q^m}, bracket index n and weight q^{ak}'),
        ),
        '([m]_q - [m]_q^n) * G_{n,q} = [2]_q sum_{k<n} C(n,k) [m]_q^k '
        'G_{n,q^m} sum_a (-1)^a q^{a(k+1)} [a]_q^{n-k}',
    ),
)

_BY_ID = collections.OrderedDict((spec.id_, spec) for spec in _CATALOG)


def catalog():
    """Return the list of IdentitySpecs."""
    return list(_CATALOG)


def get_spec(id_):
    """Return the IdentitySpec for an id.

    Raises IdentityError if the id is unknown.
    """
    try:
        return _BY_ID[id_]
    except KeyError:
        raise exceptions.IdentityError('unknown identity {!r}'.format(id_))


def get_variant(spec, name):
    """Return a variant of an IdentitySpec by name.

    "printed" selects the as-printed variant and "corrected" the variant
    expected to hold (the as-printed one if it is expected to hold).

    Raises IdentityError if there is no such variant.
    """
    if name == 'printed':
        name = AS_PRINTED
    elif name == 'corrected':
        holding = [v for v in spec.variants if v.expected_to_hold]
        if holding:
            return holding[-1]
    for variant in spec.variants:
        if variant.name == name:
            return variant
    raise exceptions.IdentityError('unknown variant {!r} of {}'
                                   .format(name, spec.id_))


def default_config():
    """Return {id: {param: default values}} for the whole catalog."""
    return collections.OrderedDict(
        (spec.id_, collections.OrderedDict(
            (param.name, param.default) for param in spec.params
        ))
        for spec in _CATALOG
    )


##############################################################################
# Verification
##############################################################################


def _check_params(spec, params):
    """Return params as an ordered dict after validation."""
    names = [param.name for param in spec.params]
    unknown = sorted(set(params) - set(names))
    if unknown:
        raise exceptions.IdentityError('unknown parameter {!r} for {}'
                                       .format(unknown[0], spec.id_))
    checked = collections.OrderedDict()
    for param in spec.params:
        if param.name not in params:
            raise exceptions.IdentityError('missing parameter {!r} for {}'
                                           .format(param.name, spec.id_))
        value = params[param.name]
        if value < 0:
            raise exceptions.IdentityError('parameter {} must be '
                                           'non-negative'.format(param.name))
        if param.odd and value % 2 == 0:
            raise exceptions.ParityError('{} must be odd for this identity'
                                         .format(param.name))
        checked[param.name] = value
    return checked


def sides(id_, variant, params):
    """Return the (lhs, rhs) pair a variant builds for params.

    Raises IdentityError, ParityError or UnevaluableError.
    """
    spec = get_spec(id_)
    return get_variant(spec, variant).build(**_check_params(spec, params))


def _is_zero(value):
    if isinstance(value, Fraction):
        return value == 0
    return value.is_zero


def _oracle_verdict(variant, n, tolerance):
    """Return whether the THM3A closed form is inside every enclosure."""
    two_bracket = variant.build.keywords['two_bracket']
    return all(
        oracle.check_closed_form(Family.Q_GENOCCHI, n, x, ORACLE_Q,
                                 tolerance, two_bracket).contained
        for x in ORACLE_XS
    )


def verify(id_, variant, params, tolerance=oracle.DEFAULT_TOLERANCE):
    """Build both sides, subtract and return an IdentityReport.

    Raises IdentityError for unknown ids, variants or parameters and
    ParityError when an odd parameter is even.
    """
    spec = get_spec(id_)
    chosen = get_variant(spec, variant)
    checked = _check_params(spec, params)
    start = time.perf_counter()
    spot_checks = None
    try:
        lhs, rhs = chosen.build(**checked)
    except exceptions.UnevaluableError as e:
        holds = False
        difference = 'unevaluable: {}'.format(e)
    else:
        diff = rhs - lhs
        holds = _is_zero(diff)
        difference = render.to_plain(diff)
        if isinstance(diff, PolyX):
            spot_checks = tuple(diff.eval_int(j).is_zero
                                for j in SPOT_POINTS)
            assert not holds or all(spot_checks)
    verdict = None
    if spec.id_ == 'THM3A':
        verdict = _oracle_verdict(chosen, checked['n'], tolerance)
    elapsed = time.perf_counter() - start
    report = IdentityReport(spec.id_, chosen.name, dict(checked), holds,
                            difference, elapsed, chosen.expected_to_hold,
                            verdict, spot_checks, spec.anchor, chosen.note)
    if not holds and chosen.expected_to_hold:
        logger.warning('{} {} {} fails: {}'.format(
            spec.id_, chosen.name, _format_params(checked), difference
        ))
    else:
        logger.info('{} {} {}: {}'.format(
            spec.id_, chosen.name, _format_params(checked),
            'holds' if holds else 'fails'
        ))
    return report


def _format_params(params):
    return ','.join('{}={}'.format(k, v) for k, v in params.items())


def expand_params(spec, ranges):
    """Yield param dicts for the product of ranges, lexicographically.

    Parameters missing from ranges take the catalog defaults. Even values
    of odd parameters are skipped.

    Raises IdentityError on unknown parameter names.
    """
    names = [param.name for param in spec.params]
    unknown = sorted(set(ranges) - set(names))
    if unknown:
        raise exceptions.IdentityError('unknown parameter {!r} for {}'
                                       .format(unknown[0], spec.id_))
    axes = []
    for param in spec.params:
        values = sorted(set(ranges.get(param.name, param.default)))
        if param.odd:
            even = [v for v in values if v % 2 == 0]
            if even:
                logger.warning('{}: skipping even {} values {}'
                               .format(spec.id_, param.name, even))
            values = [v for v in values if v % 2 == 1]
        axes.append(values)
    for combo in itertools.product(*axes):
        yield collections.OrderedDict(zip(names, combo))


def first_failure(id_, variant, bounds):
    """Return the lexicographically least failing params, or None.

    Empty bounds, or an empty range for any parameter, give None.

    Raises IdentityError for unknown ids, variants or parameters.
    """
    spec = get_spec(id_)
    name = get_variant(spec, variant).name
    bounds = {key: tuple(values) for key, values in bounds.items()}
    if not bounds or any(len(values) == 0 for values in bounds.values()):
        return None
    for params in expand_params(spec, bounds):
        if not verify(id_, name, params).holds_exact:
            return dict(params)
    return None


def parity_verdicts(reports):
    """Summarize the starred identities by parity of n.

    Returns ParityVerdicts sorted by id, variant and parity.
    """
    groups = collections.OrderedDict()
    for report in reports:
        if report.id_ not in PARITY_IDS or 'n' not in report.params:
            continue
        parity = 'even' if report.params['n'] % 2 == 0 else 'odd'
        groups.setdefault((report.id_, report.variant, parity),
                          []).append(report.holds_exact)
    return [ParityVerdict(id_, variant, parity, all(holds), len(holds))
            for (id_, variant, parity), holds in sorted(groups.items())]


def errata(reports):
    """List the variants not expected to hold, with their first failures.

    The first failure is the lexicographically least failing params among
    reports, or None if every reported tuple held. Returns Errata sorted by
    id and variant.
    """
    found = collections.OrderedDict()
    for report in sorted(reports, key=_report_key):
        if report.expected:
            continue
        key = (report.id_, report.variant)
        erratum = found.get(key)
        if erratum is None:
            found[key] = erratum = Erratum(report.id_, report.variant,
                                           report.note, None)
        if erratum.first_failure is None and not report.holds_exact:
            found[key] = erratum._replace(first_failure=dict(report.params))
    return [found[key] for key in sorted(found)]


##############################################################################
# Suite
##############################################################################


def _report_key(report):
    return (report.id_, report.variant, tuple(report.params.values()))


def _verify_task(task):
    id_, variant, params, tolerance = task
    return verify(id_, variant, params, tolerance)


def plan(ranges, variants=None, tolerance=oracle.DEFAULT_TOLERANCE):
    """Return the (id, variant, params, tolerance) tasks of a suite.

    ranges maps ids to {param: values}; variants optionally maps ids to
    variant names (default: all variants).

    Raises IdentityError for unknown ids, variants or parameters.
    """
    variants = variants or {}
    tasks = []
    for id_, id_ranges in ranges.items():
        try:
            spec = get_spec(id_)
        except exceptions.IdentityError:
            raise exceptions.IdentityError('unknown id in config: {}'
                                           .format(id_))
        names = variants.get(id_)
        chosen = ([get_variant(spec, name).name for name in names]
                  if names else [v.name for v in spec.variants])
        for params in expand_params(spec, id_ranges):
            for name in chosen:
                tasks.append((id_, name, dict(params), tolerance))
    return tasks


class SuiteRunner(object):

    """Runs suite tasks, optionally in worker processes.

    on_report fires once per finished report, in completion order. The
    returned list is always sorted by id, variant and parameters.
    """

    def __init__(self, jobs=1):
        if jobs < 1:
            raise ValueError('jobs must be positive, got {}'.format(jobs))
        self._jobs = jobs
        self.on_report = Event('SuiteRunner.on_report')

    def run(self, tasks):
        if self._jobs == 1 or len(tasks) < 2:
            reports = []
            for task in tasks:
                report = _verify_task(task)
                self.on_report.fire(report)
                reports.append(report)
        else:
            reports = asyncio.run(self._run_parallel(tasks))
        return sorted(reports, key=_report_key)

    async def _run_parallel(self, tasks):
        loop = asyncio.get_running_loop()
        reports = []
        with concurrent.futures.ProcessPoolExecutor(self._jobs) as pool:
            futures = [loop.run_in_executor(pool, _verify_task, task)
                       for task in tasks]
            for future in asyncio.as_completed(futures):
                report = await future
                self.on_report.fire(report)
                reports.append(report)
        return reports


def run_suite(ranges, variants=None, tolerance=oracle.DEFAULT_TOLERANCE,
              jobs=1, on_report=None):
    """Verify every (id, variant, params) tuple of a suite.

    Returns IdentityReports sorted by id, variant and parameters; an empty
    ranges mapping gives an empty list.

    Raises IdentityError for unknown ids in ranges.
    """
    tasks = plan(ranges, variants, tolerance)
    runner = SuiteRunner(jobs)
    if on_report is None:
        reports = runner.run(tasks)
    else:
        with runner.on_report.observing(on_report):
            reports = runner.run(tasks)
    logger.info('Suite finished: {} reports, {} failing'.format(
        runner.on_report.fire_count,
        sum(1 for r in reports if not r.holds_exact)
    ))
    return reports


def report_to_json(report, elapsed=True):
    """Return a JSON-serializable dict for an IdentityReport.

    With elapsed=False the timing is left out, so the dict only depends on
    the verified tuple.
    """
    obj = {
        'id': report.id_,
        'variant': report.variant,
        'params': dict(report.params),
        'holds_exact': report.holds_exact,
        'difference': report.difference,
        'expected': report.expected,
        'oracle': report.oracle,
        'spot_checks': (None if report.spot_checks is None
                        else list(report.spot_checks)),
        'anchor': report.anchor,
        'note': report.note,
    }
    if elapsed:
        obj['elapsed'] = round(report.elapsed, 6)
    return obj

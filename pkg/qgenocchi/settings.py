"""Environment settings and the suite configuration file.

The configuration file is flat text, one "key = value" per line:

    # comment
    identity.EQ17.n = 1..10
    identity.PROP2.variants = sign-corrected
    tolerance_exponent = 25
    report = suite.json
    jobs = 2
    arbitrate = true

Identities not mentioned are not run; parameters of a mentioned identity
that are not given take the catalog defaults.
"""

import collections
import logging
import os
from fractions import Fraction

from qgenocchi import exceptions, schemas

logger = logging.getLogger(__name__)

MEMO_CAP = 64
DEFAULT_MAX_N = 64
MAX_N_VARIABLE = 'QGEN_MAX_N'
IDENTITY_PREFIX = 'identity.'
VARIANTS_KEY = 'variants'

SuiteConfig = collections.namedtuple('SuiteConfig', [
    'identities',  # {id: {'params': {name: tuple}, 'variants': list|None}}
    'tolerance',  # Fraction
    'report',  # path or None
    'jobs',  # int
    'arbitrate',  # bool
])


def max_n(environ=None):
    """Return the cap on n from QGEN_MAX_N.

    Raises ConfigError if the variable is set but not a non-negative integer.
    """
    environ = os.environ if environ is None else environ
    raw = environ.get(MAX_N_VARIABLE)
    if raw is None or raw.strip() == '':
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise exceptions.ConfigError('{} must be an integer but got {!r}'
                                     .format(MAX_N_VARIABLE, raw))
    if value < 0:
        raise exceptions.ConfigError('{} must be non-negative but got {}'
                                     .format(MAX_N_VARIABLE, value))
    return value


def read_pairs(text):
    """Split config text into an ordered dict of raw key/value strings.

    Raises ConfigError on lines without "=" and on duplicate keys.
    """
    pairs = collections.OrderedDict()
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition('=')
        key = key.strip()
        if not sep or not key:
            raise exceptions.ConfigError('line {}: expected key = value'
                                         .format(lineno))
        if key in pairs:
            raise exceptions.ConfigError('line {}: duplicate key \'{}\''
                                         .format(lineno, key))
        pairs[key] = value.strip()
    return pairs


def parse_config(text):
    """Parse suite configuration text into a SuiteConfig.

    Raises ConfigError if the text is malformed.
    """
    pairs = read_pairs(text)
    options = {}
    identities = collections.OrderedDict()
    for key, value in pairs.items():
        if not key.startswith(IDENTITY_PREFIX):
            options[key] = value
            continue
        id_, sep, name = key[len(IDENTITY_PREFIX):].partition('.')
        if not sep or not id_ or not name:
            raise exceptions.ConfigError(
                'expected identity.<ID>.<name> but got \'{}\''.format(key)
            )
        entry = identities.setdefault(id_, {'params': {}, 'variants': None})
        try:
            if name == VARIANTS_KEY:
                entry['variants'] = schemas.IDENTITY_VARIANTS.parse(value)
            else:
                entry['params'][name] = schemas.IDENTITY_PARAM.parse(value)
        except ValueError as e:
            raise exceptions.ConfigError('Key \'{}\': {}'.format(key, e))
    try:
        section = schemas.SUITE_OPTIONS.parse(options)
    except ValueError as e:
        raise exceptions.ConfigError(str(e))
    config = SuiteConfig(
        identities=identities,
        tolerance=Fraction(1, 10 ** section.tolerance_exponent),
        report=section.report,
        jobs=section.jobs,
        arbitrate=section.arbitrate,
    )
    logger.debug('Parsed config with {} identities'.format(len(identities)))
    return config


def load_config(path):
    """Read and parse a suite configuration file.

    Raises ConfigError if the file cannot be read or is malformed.
    """
    try:
        with open(path) as f:
            text = f.read()
    except OSError as e:
        raise exceptions.ConfigError('Failed to read config {}: {}'
                                     .format(path, e))
    return parse_config(text)

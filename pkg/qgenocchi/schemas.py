"""Enums and the suite configuration schema."""

# Stop pylint from complaining about enum:
# pylint: disable=no-init

import enum

from qgenocchi.fields import (Section, Field, IntField, BoolField, ListField,
                              RangeField)


##############################################################################
# Enums
##############################################################################

class Family(enum.Enum):

    """Number and polynomial families."""

    EULER = 'euler'
    GENOCCHI = 'genocchi'
    BERNOULLI = 'bernoulli'
    Q_EULER = 'q-euler'
    Q_GENOCCHI = 'q-genocchi'
    Q_BERNOULLI = 'q-bernoulli'

    @property
    def is_q(self):
        return self.value.startswith('q-')


class StarVariant(enum.Enum):

    """Coefficient sets of the star operation."""

    EULER = 'euler'
    GENOCCHI = 'genocchi'


class BracketQuotient(enum.Enum):

    """Forms of the bracket quotient in the star operation."""

    SIGNED = 'signed'  # [mk]_{-q} / [k]_{-q}
    DOUBLED = 'doubled'  # [2]_{q^{mk}} / [2]_{q^k}


class OutputKind(enum.Enum):

    """Kinds of CLI output record."""

    NUMBER = 'number'
    POLYNOMIAL = 'polynomial'
    ENCLOSURE = 'enclosure'
    REPORT = 'report'


class OutputFormat(enum.Enum):

    """CLI output formats."""

    PLAIN = 'plain'
    LATEX = 'latex'
    JSON = 'json'
    CSV = 'csv'


##############################################################################
# Suite configuration
##############################################################################

SUITE_OPTIONS = Section(
    ('tolerance_exponent', IntField(minimum=1, is_optional=True,
                                    default=25)),
    ('report', Field(is_optional=True)),
    ('jobs', IntField(minimum=1, is_optional=True, default=1)),
    ('arbitrate', BoolField(is_optional=True, default=True)),
)

IDENTITY_PARAM = RangeField()

IDENTITY_VARIANTS = ListField(Field())

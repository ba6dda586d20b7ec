"""Typed fields for parsing flat key = value configuration.

Each field turns the raw string found in a configuration file (or None when
the key is absent) into a Python value. A Section groups named fields and
produces a SimpleNamespace. Errors are ValueErrors whose messages nest the
path to the offending value.
"""

import types

from qgenocchi import utils


class Field(object):

    """An untyped field holding a string."""

    def __init__(self, is_optional=False, default=None):
        self._is_optional = is_optional
        self._default = default

    def parse(self, input_):
        """Parse the field.

        Raises ValueError if the input is None and the Field is not optional.
        """
        if input_ is None:
            if not self._is_optional:
                raise ValueError('{} is not optional'
                                 .format(type(self).__name__))
            return self._default
        return self._convert(input_.strip())

    def _convert(self, text):
        return text


class IntField(Field):

    """An integer field with an optional lower bound."""

    def __init__(self, minimum=None, **kwargs):
        super().__init__(**kwargs)
        self._minimum = minimum

    def _convert(self, text):
        try:
            value = int(text)
        except ValueError:
            raise ValueError('IntField expected integer but got {!r}'
                             .format(text))
        if self._minimum is not None and value < self._minimum:
            raise ValueError('IntField expected at least {} but got {}'
                             .format(self._minimum, value))
        return value


class BoolField(Field):

    """A true/false field."""

    _VALUES = {'true': True, 'false': False}

    def _convert(self, text):
        try:
            return self._VALUES[text.lower()]
        except KeyError:
            raise ValueError('BoolField expected true or false but got {!r}'
                             .format(text))


class RangeField(Field):

    """A comma list of integers and inclusive a..b ranges."""

    def _convert(self, text):
        return utils.parse_int_list(text)


class ListField(Field):

    """A comma list of items parsed by another field."""

    def __init__(self, field, **kwargs):
        super().__init__(**kwargs)
        self._field = field

    def _convert(self, text):
        res = []
        for item in text.split(','):
            try:
                res.append(self._field.parse(item))
            except ValueError as e:
                raise ValueError('ListField item: {}'.format(e))
        return res


class Section(object):

    """A collection of fields paired with names.

    Parses a dict of raw strings into a SimpleNamespace. Keys missing from
    the input are parsed as None; keys without a field are an error.
    """

    def __init__(self, *args):
        self._name_field_pairs = args

    @property
    def names(self):
        return [name for name, _ in self._name_field_pairs]

    def parse(self, input_):
        """Parse the section.

        Raises ValueError on unknown keys or if any field fails to parse.
        """
        if not isinstance(input_, dict):
            raise ValueError('Section expected dict but got {}'
                             .format(type(input_)))
        unknown = sorted(set(input_) - set(self.names))
        if unknown:
            raise ValueError('Section has unknown key \'{}\''
                             .format(unknown[0]))
        res = types.SimpleNamespace()
        for name, field in self._name_field_pairs:
            try:
                value = field.parse(input_.get(name))
            except ValueError as e:
                raise ValueError('Section field \'{}\': {}'.format(name, e))
            setattr(res, name, value)
        return res

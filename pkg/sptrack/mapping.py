# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 The sptrack developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Typed field mappings.

A :class:`Mapping` is an ordered set of :class:`Field` descriptors. It backs
both the CSV rows of :mod:`sptrack.records` and the configuration sections
of :mod:`sptrack.config`: values are validated on assignment and converted
to and from their text form for the wire.
"""

import math
from operator import itemgetter
from itertools import zip_longest

__all__ = ['Field', 'Mapping', 'TextField', 'IntegerField', 'FloatField',
           'SetField', 'ListField']


class Field(object):
    """Base mapping field class."""
    def __init__(self, name=None, default=None, required=False):
        self.name = name
        self.default = default
        self.required = required

    def __get__(self, instance, owner):
        if instance is None:
            return self
        value = instance._data.get(self.name)
        if value is None and self.default is not None:
            default = self.default
            if hasattr(default, '__call__'):
                default = default()
            value = default
        return value

    def __set__(self, instance, value):
        if value is not None:
            value = self._set_value(value)
        instance._data[self.name] = value

    def _set_value(self, value):
        return value

    def from_text(self, text):
        """Decodes field value from its wire form. Empty text is
        :const:`None`."""
        if text is None or text == '':
            return None
        return self._set_value(text)

    def to_text(self, value):
        """Encodes field value to its wire form."""
        if value is None:
            return ''
        return str(value)


class MetaMapping(type):

    def __new__(mcs, name, bases, d):
        fields = []
        names = []
        def merge_fields(items):
            for name, field in items:
                if field.name is None:
                    field.name = name
                if name not in names:
                    fields.append((name, field))
                    names.append(name)
                else:
                    fields[names.index(name)] = (name, field)
        for base in bases:
            if hasattr(base, '_fields'):
                merge_fields(base._fields)
        merge_fields([(k, v) for k, v in d.items() if isinstance(v, Field)])
        if '_fields' in d:
            merge_fields(d['_fields'])
        d['_fields'] = fields
        return super(MetaMapping, mcs).__new__(mcs, name, bases, d)


class Mapping(object, metaclass=MetaMapping):

    def __init__(self, *args, **kwargs):
        fieldnames = map(itemgetter(0), self._fields)
        values = dict(zip_longest(fieldnames, args))
        if None in values:
            raise ValueError('Too many positional values: %r' % (args,))
        values.update(kwargs)
        self._data = {}
        for attrname, field in self._fields:
            attrval = values.pop(attrname, None)
            setattr(self, attrname, attrval)
        if values:
            raise ValueError('Unexpected kwargs found: %r' % sorted(values))

    @classmethod
    def build(cls, *a):
        fields = []
        newcls = type('Generic' + cls.__name__, (cls,), {})
        for field in a:
            if field.name is None:
                raise ValueError('Name is required for ordered fields.')
            setattr(newcls, field.name, field)
            fields.append((field.name, field))
        newcls._fields = fields
        return newcls

    @classmethod
    def from_row(cls, row):
        """Builds mapping from list of text values in field order."""
        if len(row) != len(cls._fields):
            raise ValueError('Expected %d values, got %d'
                             % (len(cls._fields), len(row)))
        values = {}
        for (name, field), text in zip(cls._fields, row):
            try:
                values[name] = field.from_text(text.strip())
            except (TypeError, ValueError) as err:
                raise ValueError('Field %r: %s' % (name, err))
        return cls(**values)

    def to_row(self):
        """Encodes mapping as list of text values in field order."""
        row = []
        for name, field in self._fields:
            value = getattr(self, name)
            if value is None and field.required:
                raise ValueError('Field %r value should not be None' % name)
            row.append(field.to_text(value))
        return row

    def __getitem__(self, key):
        return self.values()[key]

    def __iter__(self):
        return iter(self.values())

    def __len__(self):
        return len(self._fields)

    def __eq__(self, other):
        if not isinstance(other, Mapping):
            return list(self) == list(other)
        return self.items() == other.items()

    def __ne__(self, other):
        return not (self == other)

    def __repr__(self):
        return '%s(%s)' % (self.__class__.__name__,
                           ', '.join('%s=%r' % (key, value)
                                     for key, value in self.items()))

    @classmethod
    def keys(cls):
        return [key for key, field in cls._fields]

    def values(self):
        return [getattr(self, key) for key in self.keys()]

    def items(self):
        return [(key, getattr(self, key)) for key in self.keys()]


class TextField(Field):
    """Mapping field for string values."""
    def _set_value(self, value):
        if not isinstance(value, str):
            raise TypeError('String value expected, got %r' % value)
        return value


class IntegerField(Field):
    """Mapping field for integer values.

    :param minimum: Smallest accepted value, inclusive.
    """
    def __init__(self, name=None, default=None, required=False,
                 minimum=None):
        super(IntegerField, self).__init__(name, default, required)
        self.minimum = minimum

    def _set_value(self, value):
        if isinstance(value, bool):
            raise TypeError('Integer value expected, got %r' % value)
        if isinstance(value, float):
            if not value.is_integer():
                raise TypeError('Integer value expected, got %r' % value)
            value = int(value)
        if not isinstance(value, int):
            try:
                value = int(value)
            except Exception:
                raise TypeError('Integer value expected, got %r' % value)
        if self.minimum is not None and value < self.minimum:
            raise ValueError('Value %r is less than %r'
                             % (value, self.minimum))
        return value


class FloatField(Field):
    """Mapping field for finite float values. Text form keeps full precision.

    :param positive: Reject values that are not strictly positive.
    """
    def __init__(self, name=None, default=None, required=False,
                 positive=False):
        super(FloatField, self).__init__(name, default, required)
        self.positive = positive

    def _set_value(self, value):
        if isinstance(value, bool):
            raise TypeError('Float value expected, got %r' % value)
        try:
            value = float(value)
        except Exception:
            raise TypeError('Float value expected, got %r' % value)
        if not math.isfinite(value):
            raise ValueError('Finite value expected, got %r' % value)
        if self.positive and value <= 0:
            raise ValueError('Positive value expected, got %r' % value)
        return value

    def to_text(self, value):
        if value is None:
            return ''
        return repr(float(value))


class SetField(Field):
    """Mapping field for predefined set of values."""
    def __init__(self, name=None, default=None, required=False,
                 values=None, field=None):
        super(SetField, self).__init__(name, default, required)
        self.field = field or TextField()
        self.values = values and tuple(values) or ()

    def _set_value(self, value):
        value = self.field._set_value(value)
        if value not in self.values:
            raise ValueError('Unexpectable value %r, expected one of %r'
                             % (value, self.values))
        return value


class ListField(Field):
    """Mapping field for fixed or variable length lists of values of one
    field type."""
    def __init__(self, field, name=None, default=None, required=False,
                 length=None):
        super(ListField, self).__init__(name, default, required)
        self.field = field
        self.length = length

    def _set_value(self, value):
        if isinstance(value, str):
            value = [item for item in value.split(';')]
        value = [self.field._set_value(item) for item in value]
        if self.length is not None and len(value) != self.length:
            raise ValueError('Expected %d items, got %d'
                             % (self.length, len(value)))
        return tuple(value)

    def to_text(self, value):
        if value is None:
            return ''
        return ';'.join(self.field.to_text(item) for item in value)

# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 The sptrack developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""CSV line codec.

Every file exchanged by sptrack is a comma separated table with a header
line naming the columns of a :class:`~sptrack.mapping.Mapping` subclass from
:mod:`sptrack.records`. Decoding errors are reported with the offending line
number so they can be fixed by hand.
"""

import csv
import io
import logging
from .exceptions import FormatError

log = logging.getLogger(__name__)

__all__ = ['decode', 'decode_record', 'encode', 'encode_record',
           'load', 'dump']

#: Column separator.
FIELD_SEP = ','
#: Line terminator used on output.
RECORD_SEP = '\n'


def decode(data, mapping, source=None):
    """Decodes CSV text into list of records.

    Blank lines and lines starting with ``#`` are skipped. The first
    remaining line is the header and must list the mapping fields in order.

    :param data: CSV text.
    :type data: str

    :param mapping: Record class to build.
    :type mapping: :class:`~sptrack.mapping.Mapping` subclass

    :param source: File name for error messages.
    :type source: str

    :return: List of `mapping` instances.
    :rtype: list

    :raises: :exc:`~sptrack.exceptions.FormatError` on malformed header or
             rows.
    """
    if not isinstance(data, str):
        raise TypeError('str expected, got %r' % type(data))
    records = []
    header = None
    reader = csv.reader(io.StringIO(data), delimiter=FIELD_SEP)
    for row in reader:
        line = reader.line_num
        if not row or not ''.join(row).strip() or row[0].startswith('#'):
            continue
        if header is None:
            header = [item.strip() for item in row]
            if header != mapping.keys():
                raise FormatError('unexpected header %r, expected %r'
                                  % (FIELD_SEP.join(header),
                                     FIELD_SEP.join(mapping.keys())),
                                  line, source)
            continue
        records.append(decode_record(row, mapping, line, source))
    if header is None:
        raise FormatError('missing header line', None, source)
    log.debug('decoded %d %s records from %s',
              len(records), mapping.__name__, source or '<data>')
    return records


def decode_record(row, mapping, line=None, source=None):
    """Decodes single CSV row (already split into values)."""
    try:
        return mapping.from_row(row)
    except (TypeError, ValueError) as err:
        raise FormatError(str(err), line, source)


def encode(records, mapping):
    """Encodes records into CSV text with header line.

    :param records: Records to encode.
    :type records: iterable

    :param mapping: Record class, provides the header.

    :rtype: str
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, delimiter=FIELD_SEP,
                        lineterminator=RECORD_SEP)
    writer.writerow(mapping.keys())
    for record in records:
        writer.writerow(encode_record(record))
    return buffer.getvalue()


def encode_record(record):
    """Encodes single record into list of text values."""
    return record.to_row()


def load(path, mapping):
    """Reads and decodes CSV file."""
    with open(path, 'r', newline='') as fobj:
        return decode(fobj.read(), mapping, str(path))


def dump(path, records, mapping):
    """Encodes and writes CSV file."""
    with open(path, 'w', newline='') as fobj:
        fobj.write(encode(records, mapping))

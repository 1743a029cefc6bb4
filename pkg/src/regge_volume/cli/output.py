# -*- coding: utf-8 -*-
#
# Copyright 2026 The regge-volume Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""
Deterministic rendering of result documents.

Every float is printed with 17 significant digits in both JSON and CSV,
so the two renderings of one request carry identical numbers and a
re-run is byte-identical. Non-finite floats become ``null`` in JSON and
``nan``/``inf``/``-inf`` in CSV.
"""

import csv
import io
import json
import math
import numbers

import numpy as np

from regge_volume.core import lattice


__all__ = (
    'SCHEMA_VERSION', 'format_number', 'dumps', 'render_csv',
    'result_document', 'error_document',
)

SCHEMA_VERSION = 1


def format_number(value):
    """Text for one number: 17 significant digits for floats."""
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, lattice.HalfInt):
        value = float(value)
    value = float(value)
    if math.isnan(value):
        return 'nan'
    if math.isinf(value):
        return 'inf' if value > 0 else '-inf'
    return format(value, '.17g')


def dumps(obj):
    """Serialize ``obj`` to one line of JSON with fixed number format.

    Mappings keep their insertion order; numpy arrays and tuples become
    lists; :class:`HalfInt` values become numbers.
    """
    if obj is None:
        return 'null'
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, (bool, np.bool_)):
        return 'true' if obj else 'false'
    if isinstance(obj, dict):
        items = (f'{json.dumps(str(k))}: {dumps(v)}' for k, v in obj.items())
        return '{' + ', '.join(items) + '}'
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if isinstance(obj, (list, tuple)):
        return '[' + ', '.join(dumps(item) for item in obj) + ']'
    if isinstance(obj, lattice.QuadrupleJ):
        return dumps([float(j) for j in obj])
    if isinstance(obj, (numbers.Number, lattice.HalfInt)):
        text = format_number(obj)
        return 'null' if text in ('nan', 'inf', '-inf') else text
    raise TypeError(f'Cannot serialize {type(obj).__name__} to JSON.')


def render_csv(header, rows):
    """CSV text with a header row; numbers via :func:`format_number`."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([
            cell if isinstance(cell, str) else format_number(cell)
            for cell in row
        ])
    return buffer.getvalue()


def result_document(request, metadata, payload):
    return {
        'schema_version': SCHEMA_VERSION,
        'request': request,
        'metadata': metadata,
        'payload': payload,
    }


def error_document(request, error):
    """Document for a failed run; ``payload.error.reason`` is stable."""
    details = {
        'reason': error.reason,
        'exit_code': error.exit_code,
        'message': str(error),
    }
    for attribute in ('index', 'step'):
        if getattr(error, attribute, None) is not None:
            details[attribute] = getattr(error, attribute)
    state = getattr(error, 'state', None)
    if state is not None:
        details['state'] = {'l': state.l, 'phi': state.phi}
    return result_document(request, None, {'error': details})

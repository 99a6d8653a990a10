import logging
import math
import os

from django.conf import settings

from djapps.core.exceptions import ParseError


logger = logging.getLogger(__name__)

SIGNIFICANT_DIGITS = 12


def round_floats(value, digits=SIGNIFICANT_DIGITS):
    """
    Recursively convert a report to plain JSON types, rounding floats to
    ``digits`` significant digits; non-finite values become None.
    """
    import numpy as np
    if isinstance(value, dict):
        return {str(k): round_floats(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [round_floats(x, digits) for x in value]
    if isinstance(value, np.ndarray):
        return round_floats(value.tolist(), digits)
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if not math.isfinite(value):
            return None
        return float('%.*g' % (digits, value))
    return value


def dump_json(data):
    import json
    return json.dumps(round_floats(data), sort_keys=True, indent=2) + '\n'


def output_path(out_dir, name):
    out_dir = out_dir or settings.RISK_OUTPUT_DIR
    os.makedirs(out_dir, exist_ok=True)
    return os.path.join(out_dir, name)


def write_json(out_dir, name, data):
    path = output_path(out_dir, name)
    with open(path, 'w', encoding='utf-8') as f:
        f.write(dump_json(data))
    logger.info('Wrote %s', path)
    return path


def write_csv(out_dir, name, header, rows):
    import csv
    path = output_path(out_dir, name)
    with open(path, 'w', newline='', encoding='utf-8') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            writer.writerow([_csv_cell(x) for x in row])
    logger.info('Wrote %s', path)
    return path


def _csv_cell(value):
    if isinstance(value, float):
        return '' if not math.isfinite(value) else '%.*g' % (SIGNIFICANT_DIGITS, value)
    if value is None:
        return ''
    return value


def write_svg(out_dir, name, template, context):
    from django.template.loader import render_to_string
    path = output_path(out_dir, name)
    with open(path, 'w', encoding='utf-8') as f:
        f.write(render_to_string(template, context))
    logger.info('Wrote %s', path)
    return path


def read_text(path):
    """
    UTF-8 text of an input file. Undecodable bytes become a ParseError at
    the line and column where they sit.
    """
    with open(path, 'rb') as f:
        data = f.read()
    try:
        return data.decode('utf-8')
    except UnicodeDecodeError as exc:
        line_start = data.rfind(b'\n', 0, exc.start) + 1
        raise ParseError(
            'Invalid UTF-8 byte 0x%02x.' % data[exc.start],
            row=data.count(b'\n', 0, exc.start) + 1,
            column=exc.start - line_start + 1,
            path=path,
        ) from exc


def read_json_file(path):
    import json
    try:
        return json.loads(read_text(path))
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, row=exc.lineno, column=exc.colno, path=path) from exc


def flatten(d, parent_key='', sep='.'):
    from collections.abc import Mapping
    items = []
    for k, v in d.items():
        new_key = parent_key + sep + k if parent_key else k
        if isinstance(v, Mapping):
            items.extend(flatten(v, new_key, sep=sep).items())
        else:
            items.append((new_key, v))
    return dict(items)

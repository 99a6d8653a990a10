import csv
import io
import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from numpy.polynomial import Polynomial

from djapps.core.exceptions import ArityError, DomainError, ParseError
from djapps.core.utils import read_json_file, read_text
from .interpolation import interpolate


logger = logging.getLogger(__name__)

STAGE_MIN = 1.0
STAGE_MAX = 5.0

PUBLISHED_CONCENTRATIONS = (0.27, 2.43, 3.33)

# Risk coefficients per age group (babies, boys, men, senior men).
PUBLISHED_GROUP_RISKS = {
    0.27: (0.804, 0.342, 0.204, 0.388),
    2.43: (7.237, 3.077, 1.834, 3.490),
    3.33: (9.918, 4.216, 2.513, 4.783),
}

NODE_PLACEMENTS = {
    # each group at the right end of its stage interval
    'stage_end': (1.0, 2.0, 3.0, 4.0, 5.0),
    'midpoint': (1.0, 1.5, 2.5, 3.5, 4.5),
}

# Published quartics, ascending powers of t.
PUBLISHED_INTERPOLANTS = {
    0.27: (-5.25, 8.93, -4.54, 0.92, -0.06),
    2.43: (-47.6, 81.11, -41.39, 8.48, -0.60),
    3.33: (-64.8, 110.28, -56.12, 11.47, -0.82),
}
# Leading coefficient of the 0.27 quartic before rounding.
PUBLISHED_UNROUNDED_LEADING = -0.0663


@dataclass(frozen=True)
class RiskTable:
    """Hazard quotients, one row per concentration and one column per stage node."""
    concentrations: tuple
    nodes: tuple
    values: tuple

    def __post_init__(self):
        concentrations = tuple(float(c) for c in self.concentrations)
        nodes = tuple(float(t) for t in self.nodes)
        values = tuple(tuple(float(v) for v in row) for row in self.values)
        object.__setattr__(self, 'concentrations', concentrations)
        object.__setattr__(self, 'nodes', nodes)
        object.__setattr__(self, 'values', values)

        if not nodes:
            raise DomainError('A risk table needs at least one node.')
        if any(b <= a for a, b in zip(nodes, nodes[1:])):
            raise DomainError('Nodes must be strictly increasing: %s' % (nodes,))
        if nodes[0] < STAGE_MIN or nodes[-1] > STAGE_MAX:
            raise DomainError(
                'Nodes must lie in [%s, %s]: %s' % (STAGE_MIN, STAGE_MAX, nodes))
        if len(values) != len(concentrations):
            raise ArityError(
                '%d value rows for %d concentrations.' % (len(values), len(concentrations)))
        for row in values:
            if len(row) != len(nodes):
                raise ArityError('Row %s has %d values for %d nodes.' % (row, len(row), len(nodes)))

    def interpolants(self):
        return [interpolate(self.nodes, row) for row in self.values]

    def to_dict(self):
        return {
            'concentrations': list(self.concentrations),
            'nodes': list(self.nodes),
            'values': [list(row) for row in self.values],
        }

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(data['concentrations'], data['nodes'], data['values'])
        except KeyError as exc:
            raise ParseError('Missing key %s' % exc) from exc
        except (TypeError, ValueError) as exc:
            raise ParseError('Invalid risk table: %s' % exc) from exc


def paper_risk_table(placement='stage_end'):
    """
    The published age-group risk coefficients as a table. A zero risk
    node is prepended at t = 1 since consumption begins after the first
    year of life.
    """
    try:
        nodes = NODE_PLACEMENTS[placement]
    except KeyError:
        raise DomainError(
            'Unknown node placement %r, expected one of %s'
            % (placement, ', '.join(sorted(NODE_PLACEMENTS))))
    values = [(0.0,) + PUBLISHED_GROUP_RISKS[c] for c in PUBLISHED_CONCENTRATIONS]
    return RiskTable(PUBLISHED_CONCENTRATIONS, nodes, values)


def paper_interpolants():
    return {c: Polynomial(coef) for c, coef in PUBLISHED_INTERPOLANTS.items()}


def _float_cell(value, row, column, path):
    try:
        result = float(value)
    except (TypeError, ValueError):
        raise ParseError('Not a number: %r' % value, row=row, column=column, path=path)
    if not np.isfinite(result):
        raise ParseError('Not a finite number: %r' % value, row=row, column=column, path=path)
    return result


def read_table_csv(path):
    """
    First row: a label cell followed by node stages. Following rows:
    concentration followed by one hazard quotient per node.
    """
    rows = list(csv.reader(io.StringIO(read_text(path), newline='')))
    if not rows or not any(cell.strip() for cell in rows[0]):
        raise ParseError('Empty risk table file.', row=1, path=path)
    header = rows[0]
    nodes = [_float_cell(x, 1, i + 2, path) for i, x in enumerate(header[1:])]
    concentrations, values = [], []
    for number, row in enumerate(rows[1:], start=2):
        if not any(cell.strip() for cell in row):
            continue
        if len(row) != len(header):
            raise ParseError(
                'Expected %d cells, got %d.' % (len(header), len(row)), row=number, path=path)
        concentrations.append(_float_cell(row[0], number, 1, path))
        values.append([_float_cell(x, number, i + 2, path) for i, x in enumerate(row[1:])])
    if not concentrations:
        raise ParseError('Risk table has no data rows.', row=2, path=path)
    try:
        return RiskTable(concentrations, nodes, values)
    except DomainError as exc:
        raise ParseError(str(exc), path=path) from exc


def read_table_json(path):
    data = read_json_file(path)
    if not isinstance(data, dict):
        raise ParseError('Expected a JSON object.', path=path)
    try:
        return RiskTable.from_dict(data)
    except DomainError as exc:
        raise ParseError(str(exc), path=path) from exc


def load_table(path):
    path = Path(path)
    if path.suffix.lower() == '.json':
        table = read_table_json(path)
    else:
        table = read_table_csv(path)
    logger.info('Loaded risk table %s (%d concentrations x %d nodes)',
                path, len(table.concentrations), len(table.nodes))
    return table

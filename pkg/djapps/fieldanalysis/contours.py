"""
Level curves by marching squares.

Grid values are classified against the level, every cell whose corners
disagree contributes one or two segments with vertices linearly
interpolated along its edges, and segments sharing an edge are chained
into polylines.
"""
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from djapps.core.exceptions import DomainError


MIN_GRID_SIZE = 16

# corner order: 0 (t0, c0), 1 (t1, c0), 2 (t1, c1), 3 (t0, c1)
# edge order: 0 bottom (0-1), 1 right (1-2), 2 top (3-2), 3 left (0-3)
EDGE_CORNERS = ((0, 1), (1, 2), (3, 2), (0, 3))

SEGMENT_TABLE = {
    1: [(3, 0)], 14: [(3, 0)],
    2: [(0, 1)], 13: [(0, 1)],
    3: [(3, 1)], 12: [(3, 1)],
    4: [(1, 2)], 11: [(1, 2)],
    6: [(0, 2)], 9: [(0, 2)],
    7: [(3, 2)], 8: [(3, 2)],
}

# saddles, keyed by (case, center above level)
SADDLE_TABLE = {
    (5, True): [(0, 1), (2, 3)],
    (5, False): [(3, 0), (1, 2)],
    (10, True): [(3, 0), (1, 2)],
    (10, False): [(0, 1), (2, 3)],
}


@dataclass(frozen=True)
class LevelCurveSet:
    level: float
    polylines: tuple

    @property
    def vertex_count(self):
        return sum(len(p) for p in self.polylines)

    def to_dict(self, precision=6):
        return {
            'level': self.level,
            'polylines': [
                [[round(t, precision), round(c, precision)] for t, c in line]
                for line in self.polylines
            ],
        }


def _edge_key(i, j, edge):
    # horizontal edges run along t, vertical edges along c
    if edge == 0:
        return ('t', i, j)
    if edge == 1:
        return ('c', i + 1, j)
    if edge == 2:
        return ('t', i, j + 1)
    return ('c', i, j)


def _edge_point(key, ts, cs, values):
    axis, i, j = key
    if axis == 't':
        (t0, c0), (t1, c1) = (ts[i], cs[j]), (ts[i + 1], cs[j])
        v0, v1 = values[i, j], values[i + 1, j]
    else:
        (t0, c0), (t1, c1) = (ts[i], cs[j]), (ts[i], cs[j + 1])
        v0, v1 = values[i, j], values[i, j + 1]
    s = v0 / (v0 - v1) if v0 != v1 else 0.5
    s = min(max(s, 0.0), 1.0)
    return (float(t0 + s * (t1 - t0)), float(c0 + s * (c1 - c0)))


def _segments(values):
    """Edge-key pairs of every contour segment on a grid of level offsets."""
    above = values > 0
    cases = (above[:-1, :-1].astype(int)
             | above[1:, :-1].astype(int) << 1
             | above[1:, 1:].astype(int) << 2
             | above[:-1, 1:].astype(int) << 3)
    segments = []
    for i, j in zip(*np.nonzero((cases != 0) & (cases != 15))):
        case = int(cases[i, j])
        if case in (5, 10):
            center = 0.25 * (values[i, j] + values[i + 1, j]
                             + values[i + 1, j + 1] + values[i, j + 1])
            pairs = SADDLE_TABLE[(case, bool(center > 0))]
        else:
            pairs = SEGMENT_TABLE[case]
        for e0, e1 in pairs:
            segments.append((_edge_key(i, j, e0), _edge_key(i, j, e1)))
    return segments


def _chain(segments):
    neighbours = defaultdict(list)
    for a, b in segments:
        neighbours[a].append(b)
        neighbours[b].append(a)
    visited = set()
    chains = []

    def walk(start):
        chain = [start]
        visited.add(start)
        current = start
        while True:
            following = [k for k in neighbours[current] if k not in visited]
            if not following:
                break
            current = following[0]
            visited.add(current)
            chain.append(current)
        if len(chain) > 2 and start in neighbours[current]:
            chain.append(start)
        return chain

    # open chains start at boundary edges, which have a single neighbour
    for key in sorted(k for k, v in neighbours.items() if len(v) == 1):
        if key not in visited:
            chains.append(walk(key))
    for key in sorted(neighbours):
        if key not in visited:
            chains.append(walk(key))
    return chains


def trace_level(values, ts, cs, level):
    offsets = values - level
    chains = _chain(_segments(offsets))
    return tuple(
        tuple(_edge_point(key, ts, cs, offsets) for key in chain)
        for chain in chains
    )


def level_curves(field, domain=None, levels=(1.0,), grid=256):
    """Marching-squares polylines of R = level on a grid x grid cell mesh."""
    domain = domain or field.domain
    if grid < MIN_GRID_SIZE:
        raise DomainError('Grid must have at least %d cells per axis, got %d.'
                          % (MIN_GRID_SIZE, grid))
    ts = np.linspace(domain.t_min, domain.t_max, grid + 1)
    cs = np.linspace(domain.c_min, domain.c_max, grid + 1)
    values = field(ts[:, None], cs[None, :])
    return [LevelCurveSet(float(level), trace_level(values, ts, cs, float(level)))
            for level in levels]

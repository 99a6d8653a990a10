"""
Piecewise-linear map between the stage variable t and biological age s.

Babies [1, 6) years map onto [1, 2), boys [6, 12) onto [2, 3), men
[12, 60) onto [3, 4) and senior men [60, 90] onto [4, 5]. Beyond the last
knot both directions continue the last segment.
"""
from dataclasses import dataclass

import numpy as np
from django.conf import settings

from djapps.core.exceptions import DomainError


PUBLISHED_KNOTS = ((1.0, 1.0), (2.0, 6.0), (3.0, 12.0), (4.0, 60.0), (5.0, 90.0))


@dataclass(frozen=True)
class StageMap:
    knots: tuple = PUBLISHED_KNOTS

    def __post_init__(self):
        knots = tuple((float(t), float(s)) for t, s in self.knots)
        if len(knots) < 2:
            raise DomainError('A stage map needs at least two knots.')
        for (t0, s0), (t1, s1) in zip(knots, knots[1:]):
            if not (t1 > t0 and s1 > s0):
                raise DomainError('Stage map knots must be strictly increasing: %s' % (knots,))
        object.__setattr__(self, 'knots', knots)

    @property
    def stages(self):
        return np.array([t for t, _ in self.knots])

    @property
    def ages(self):
        return np.array([s for _, s in self.knots])

    def segments(self):
        """(slope, intercept, t_start, t_end) for every linear piece."""
        result = []
        for (t0, s0), (t1, s1) in zip(self.knots, self.knots[1:]):
            slope = (s1 - s0) / (t1 - t0)
            result.append((slope, s0 - slope * t0, t0, t1))
        return result

    def stage_to_age(self, t):
        t = np.asarray(t, dtype=float)
        stages, ages = self.stages, self.ages
        if np.any(t < stages[0]):
            raise DomainError('Stage must be at least %s, got %s.' % (stages[0], t.min()))
        slope, intercept, _, _ = self.segments()[-1]
        result = np.where(t > stages[-1], slope * t + intercept, np.interp(t, stages, ages))
        return float(result) if result.ndim == 0 else result

    def age_to_stage(self, s):
        s = np.asarray(s, dtype=float)
        stages, ages = self.stages, self.ages
        if np.any(s < ages[0]):
            raise DomainError('Age must be at least %s years, got %s.' % (ages[0], s.min()))
        slope, intercept, _, _ = self.segments()[-1]
        result = np.where(s > ages[-1], (s - intercept) / slope, np.interp(s, ages, stages))
        return float(result) if result.ndim == 0 else result

    def is_extrapolated(self, t):
        return float(t) > self.knots[-1][0]


def default_stage_map():
    return StageMap(getattr(settings, 'RISK_STAGE_KNOTS', PUBLISHED_KNOTS))


def stage_to_age(t, stage_map=None):
    return (stage_map or default_stage_map()).stage_to_age(t)


def age_to_stage(s, stage_map=None):
    return (stage_map or default_stage_map()).age_to_stage(s)

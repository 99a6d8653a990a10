"""
Gradient flow of the risk field.

The system dt/dtau = dR/dt, dc/dtau = dR/dc is integrated with a fixed
step classical Runge-Kutta scheme until the trajectory leaves the domain,
the step budget is spent or the velocity vanishes.
"""
import logging
from dataclasses import dataclass

import numpy as np
from django.conf import settings
from scipy.spatial import cKDTree

from djapps.core.exceptions import DomainError
from djapps.fieldanalysis.analysis import gradient


logger = logging.getLogger(__name__)

LEFT_DOMAIN = 'left_domain'
MAX_STEPS = 'max_steps'
STEP_UNDERFLOW = 'step_underflow'
EXIT_REASONS = (LEFT_DOMAIN, MAX_STEPS, STEP_UNDERFLOW)

VELOCITY_TOLERANCE = 1e-14
BISECTION_TOLERANCE = 1e-13

SAMPLE_COLUMNS = ('tau', 't', 'c', 'R')


@dataclass(frozen=True, eq=False)
class FlowTrajectory:
    """Samples are rows of (tau, t, c, R)."""
    samples: np.ndarray
    exit_reason: str

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=float).reshape(-1, 4)
        object.__setattr__(self, 'samples', samples)
        if self.exit_reason not in EXIT_REASONS:
            raise DomainError('Unknown exit reason %r.' % self.exit_reason)

    def __len__(self):
        return len(self.samples)

    @property
    def tau(self):
        return self.samples[:, 0]

    @property
    def points(self):
        return self.samples[:, 1:3]

    @property
    def risk(self):
        return self.samples[:, 3]

    @property
    def end(self):
        return tuple(self.samples[-1, 1:3])

    def to_dict(self):
        return {
            'exit_reason': self.exit_reason,
            'samples': self.samples.tolist(),
        }

    @classmethod
    def from_dict(cls, data):
        return cls(np.asarray(data['samples'], dtype=float), data['exit_reason'])


def rk4_step(velocity, x, step):
    k1 = velocity(x)
    k2 = velocity(x + 0.5 * step * k1)
    k3 = velocity(x + 0.5 * step * k2)
    k4 = velocity(x + step * k3)
    return x + step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def _inside(domain, x):
    return domain.contains(float(x[0]), float(x[1]))


def _clip_to_boundary(domain, x, x_next):
    """Fraction of the segment x -> x_next where it crosses the boundary, and the crossing."""
    lo, hi = 0.0, 1.0
    while hi - lo > BISECTION_TOLERANCE:
        mid = 0.5 * (lo + hi)
        if _inside(domain, x + mid * (x_next - x)):
            lo = mid
        else:
            hi = mid
    point = x + hi * (x_next - x)
    point = np.clip(point, [domain.t_min, domain.c_min], [domain.t_max, domain.c_max])
    return hi, point


def integrate_vector_field(velocity, start, step, max_steps, domain, potential=None):
    """
    RK4 integration of x' = velocity(x) from ``start``.

    ``potential`` fills the R column of the samples; without it the column
    holds NaN.
    """
    if step <= 0:
        raise DomainError('Flow step must be positive, got %s.' % step)
    x = np.asarray(start, dtype=float)
    if not _inside(domain, x):
        raise DomainError('Flow start %s lies outside the domain %s.'
                          % (tuple(x), domain.as_tuple()))

    def sample(tau, point):
        value = float(potential(point[0], point[1])) if potential is not None else np.nan
        return (tau, float(point[0]), float(point[1]), value)

    samples = [sample(0.0, x)]
    tau = 0.0
    exit_reason = MAX_STEPS
    for _ in range(max_steps):
        if np.linalg.norm(velocity(x)) < VELOCITY_TOLERANCE:
            exit_reason = STEP_UNDERFLOW
            break
        x_next = rk4_step(velocity, x, step)
        if not _inside(domain, x_next):
            fraction, boundary = _clip_to_boundary(domain, x, x_next)
            samples.append(sample(tau + fraction * step, boundary))
            exit_reason = LEFT_DOMAIN
            break
        tau += step
        x = x_next
        samples.append(sample(tau, x))
    logger.debug('Flow from %s: %d samples, %s', tuple(start), len(samples), exit_reason)
    return FlowTrajectory(np.array(samples), exit_reason)


def gradient_velocity(field):
    def velocity(x):
        return np.array(gradient(field, x[0], x[1]), dtype=float)
    return velocity


def flow(field, start, step=None, max_steps=None, domain=None):
    """Gradient ascent trajectory of the risk field from ``start``."""
    step = settings.RISK_FLOW_STEP if step is None else step
    max_steps = settings.RISK_FLOW_MAX_STEPS if max_steps is None else max_steps
    domain = domain or field.domain
    return integrate_vector_field(
        gradient_velocity(field), start, step, max_steps, domain, potential=field)


def check_no_recurrence(trajectory, radius):
    """
    Discrete closed-orbit witness: False when a later sample comes back
    within ``radius`` of an earlier one after having left that radius.
    """
    points = trajectory.points
    if len(points) < 2:
        return True
    pairs = cKDTree(points).query_pairs(radius, output_type='ndarray')
    if not len(pairs):
        return True
    pairs = pairs[np.abs(pairs[:, 1] - pairs[:, 0]) > 1]
    for i in np.unique(pairs.min(axis=1)):
        distances = np.linalg.norm(points[i + 1:] - points[i], axis=1)
        outside = distances > radius
        if not outside.any():
            continue
        first = int(np.argmax(outside))
        if np.any(distances[first:] <= radius):
            logger.debug('Sample %d is revisited after leaving radius %s', i, radius)
            return False
    return True


def portrait_arrows(field, domain=None, size=12):
    """Normalized gradient directions on a size x size grid of cell centers."""
    domain = domain or field.domain
    dt = (domain.t_max - domain.t_min) / size
    dc = (domain.c_max - domain.c_min) / size
    ts = domain.t_min + dt * (np.arange(size) + 0.5)
    cs = domain.c_min + dc * (np.arange(size) + 0.5)
    t, c = np.meshgrid(ts, cs, indexing='ij')
    gt, gc = gradient(field, t, c)
    gt, gc = np.broadcast_arrays(gt, gc)
    norm = np.hypot(gt, gc)
    norm[norm == 0] = 1.0
    return [
        (float(t[i, j]), float(c[i, j]), float(gt[i, j] / norm[i, j]), float(gc[i, j] / norm[i, j]))
        for i in range(size) for j in range(size)
    ]


def default_starts(domain, count=3):
    """count x count interior grid of start points."""
    ts = np.linspace(domain.t_min, domain.t_max, count + 2)[1:-1]
    cs = np.linspace(domain.c_min, domain.c_max, count + 2)[1:-1]
    return [(float(t), float(c)) for t in ts for c in cs]

import logging
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import Polynomial
from numpy.polynomial import polynomial as P

from djapps.core.exceptions import DomainError, ParseError
from djapps.core.utils import read_json_file
from .interpolation import INTERPOLATION_DEGREE, interpolate
from .regression import regress_linear


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Rectangle:
    t_min: float
    t_max: float
    c_min: float
    c_max: float

    def __post_init__(self):
        for name in ('t_min', 't_max', 'c_min', 'c_max'):
            object.__setattr__(self, name, float(getattr(self, name)))
        if not self.t_min < self.t_max:
            raise DomainError('t_min must be below t_max: %s' % (self.as_tuple(),))
        if not self.c_min < self.c_max:
            raise DomainError('c_min must be below c_max: %s' % (self.as_tuple(),))

    @classmethod
    def from_string(cls, value):
        """Parse ``'tmin,tmax,cmin,cmax'``."""
        chunks = [x.strip() for x in str(value).split(',') if x.strip()]
        if len(chunks) != 4:
            raise DomainError('A domain needs four numbers tmin,tmax,cmin,cmax, got %r.' % value)
        try:
            return cls(*[float(x) for x in chunks])
        except ValueError as exc:
            raise DomainError('Invalid domain %r: %s' % (value, exc)) from exc

    @property
    def area(self):
        return (self.t_max - self.t_min) * (self.c_max - self.c_min)

    def contains(self, t, c):
        return self.t_min <= t <= self.t_max and self.c_min <= c <= self.c_max

    def includes(self, other):
        return (self.t_min <= other.t_min and other.t_max <= self.t_max
                and self.c_min <= other.c_min and other.c_max <= self.c_max)

    def as_tuple(self):
        return (self.t_min, self.t_max, self.c_min, self.c_max)

    def to_dict(self):
        return {'t': [self.t_min, self.t_max], 'c': [self.c_min, self.c_max]}

    @classmethod
    def from_dict(cls, data):
        return cls(data['t'][0], data['t'][1], data['c'][0], data['c'][1])


DEFAULT_DOMAIN = Rectangle(1.0, 5.0, 0.2, 3.5)


class BivariatePolynomial:
    """
    Polynomial surface sum_ij C[i, j] t^i c^j over the (t, c) plane.
    """
    def __init__(self, coefficients):
        coef = np.atleast_2d(np.asarray(coefficients, dtype=float))
        self.coefficients = coef

    def __call__(self, t, c):
        t, c = np.broadcast_arrays(np.asarray(t, dtype=float), np.asarray(c, dtype=float))
        return P.polyval2d(t, c, self.coefficients)

    def partial(self, dt=0, dc=0):
        coef = self.coefficients
        if dt:
            coef = P.polyder(coef, m=dt, axis=0)
        if dc:
            coef = P.polyder(coef, m=dc, axis=1)
        return BivariatePolynomial(coef)

    @property
    def is_affine_in_c(self):
        return not np.any(self.coefficients[:, 2:])

    def __repr__(self):
        return 'BivariatePolynomial(%s)' % self.coefficients.tolist()


def _padded(values, size=INTERPOLATION_DEGREE + 1):
    values = [float(x) for x in values]
    if len(values) > size:
        raise DomainError('At most %d coefficients allowed, got %d.' % (size, len(values)))
    return tuple(values + [0.0] * (size - len(values)))


@dataclass(frozen=True)
class RiskField:
    """
    R(t, c) = sum_k (a_k c + b_k) t^k.

    ``a`` holds the concentration slopes and ``b`` the intercepts, both
    ascending in powers of t.
    """
    a: tuple
    b: tuple
    domain: Rectangle = field(default=DEFAULT_DOMAIN)

    def __post_init__(self):
        object.__setattr__(self, 'a', _padded(self.a))
        object.__setattr__(self, 'b', _padded(self.b))
        if not np.all(np.isfinite(self.a + self.b)):
            raise DomainError('Field coefficients must be finite.')

    @property
    def slope(self):
        """g(t) = dR/dc."""
        return Polynomial(self.a)

    @property
    def intercept(self):
        """h(t) = R(t, 0)."""
        return Polynomial(self.b)

    def __call__(self, t, c):
        return self.slope(t) * c + self.intercept(t)

    def at_concentration(self, c):
        return Polynomial(np.asarray(self.a) * c + np.asarray(self.b))

    def as_surface(self):
        return BivariatePolynomial(np.column_stack([self.b, self.a]))

    def with_domain(self, domain):
        return RiskField(self.a, self.b, domain)

    def to_dict(self):
        return {
            'a': list(self.a),
            'b': list(self.b),
            'domain': self.domain.to_dict(),
        }

    @classmethod
    def from_dict(cls, data):
        try:
            domain = Rectangle.from_dict(data['domain']) if 'domain' in data else DEFAULT_DOMAIN
            return cls(tuple(data['a']), tuple(data['b']), domain)
        except (KeyError, TypeError, IndexError) as exc:
            raise ParseError('Invalid field description: %s' % exc) from exc


PUBLISHED_SLOPES = (-19.48, 33.17, -16.89, 3.45, -0.24)
PUBLISHED_INTERCEPTS = (-0.04, 0.09, -0.06, 0.007, 0.006)

# printed summaries of the published field, reported next to the computed ones
PUBLISHED_MEAN_RISK = 5.55
PUBLISHED_REGION_AREA = 12.92
PUBLISHED_PROBABILITY = 0.97


def paper_field():
    """The published risk field with domain [1, 5] x [0.2, 3.5]."""
    return RiskField(PUBLISHED_SLOPES, PUBLISHED_INTERCEPTS, DEFAULT_DOMAIN)


def fit_coefficients(concentrations, polynomials, domain=DEFAULT_DOMAIN):
    """
    Regress every power-of-t coefficient linearly across concentration.
    """
    concentrations = [float(c) for c in concentrations]
    if len(concentrations) < 2:
        raise DomainError(
            'At least two concentrations are needed to fit the concentration '
            'dependence, got %d.' % len(concentrations))
    rows = np.array([_padded(p.coef) for p in polynomials])
    a, b = [], []
    for k in range(rows.shape[1]):
        slope, intercept = regress_linear(concentrations, rows[:, k])
        a.append(slope)
        b.append(intercept)
    return RiskField(tuple(a), tuple(b), domain)


def build_field(table, domain=DEFAULT_DOMAIN):
    """Interpolate each concentration row in t, then regress across c."""
    interpolants = table.interpolants()
    logger.debug('Built %d interpolants from the risk table', len(interpolants))
    return fit_coefficients(table.concentrations, interpolants, domain)


def load_field(path):
    data = read_json_file(path)
    if not isinstance(data, dict):
        raise ParseError('Expected a JSON object.', path=path)
    return RiskField.from_dict(data)


def format_polynomial(p, variable='t', precision=2):
    """Render a polynomial in descending powers, e.g. ``-0.06 t^4 + 0.92 t^3``."""
    terms = []
    for power in range(len(p.coef) - 1, -1, -1):
        value = float(p.coef[power])
        if round(value, precision) == 0.0:
            continue
        magnitude = '%.*f' % (precision, abs(value))
        if power == 0:
            body = magnitude
        elif power == 1:
            body = '%s %s' % (magnitude, variable)
        else:
            body = '%s %s^%d' % (magnitude, variable, power)
        if not terms:
            terms.append(('-' if value < 0 else '') + body)
        else:
            terms.append(('- ' if value < 0 else '+ ') + body)
    return ' '.join(terms) if terms else '0'

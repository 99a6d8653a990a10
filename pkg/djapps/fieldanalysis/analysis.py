import logging
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate

from djapps.core.exceptions import DomainError
from djapps.core.polynomials import ROOT_TOLERANCE, is_zero, isolate_roots, trim
from djapps.fieldfit.fields import Rectangle


logger = logging.getLogger(__name__)

__all__ = [
    'Rectangle',
    'CriticalPointCertificate',
    'RegionEstimate',
    'gradient',
    'certify_no_critical_points',
    'critical_points',
    'mean_risk',
    'simpson_mean_risk',
    'risk_region_area',
    'monte_carlo_area',
    'risk_probability',
]


def gradient(field, t, c):
    """Analytic (dR/dt, dR/dc)."""
    g = field.slope
    h = field.intercept
    return g.deriv()(t) * c + h.deriv()(t), g(t)


@dataclass(frozen=True)
class CriticalPointCertificate:
    has_critical_points: bool
    min_dRdc_on_domain: float
    min_location: float
    method: str
    dRdc_roots: tuple = ()
    critical_points: tuple = ()
    degenerate: bool = False

    def to_dict(self):
        return {
            'has_critical_points': self.has_critical_points,
            'min_dRdc_on_domain': self.min_dRdc_on_domain,
            'min_location': self.min_location,
            'method': self.method,
            'dRdc_roots': list(self.dRdc_roots),
            'critical_points': [list(p) for p in self.critical_points],
            'degenerate': self.degenerate,
        }


def _extremum_candidates(p, t_min, t_max):
    candidates = [t_min, t_max]
    derivative = trim(p.deriv())
    if not is_zero(derivative):
        candidates += isolate_roots(derivative, t_min, t_max)
    return candidates


def critical_points(field, domain):
    """
    Solutions of dR/dc = g(t) = 0, dR/dt = c g'(t) + h'(t) = 0 inside the
    rectangle. Returns (points, vertical_lines): isolated points and the t
    values of whole lines of critical points.
    """
    g = trim(field.slope)
    h_prime = trim(field.intercept.deriv())
    points, lines = [], []
    if is_zero(g):
        if is_zero(h_prime):
            return points, [domain.t_min, domain.t_max]
        return points, isolate_roots(h_prime, domain.t_min, domain.t_max)
    g_prime = g.deriv()
    for root in isolate_roots(g, domain.t_min, domain.t_max):
        slope = float(g_prime(root))
        if abs(slope) > ROOT_TOLERANCE:
            c = -float(h_prime(root)) / slope
            if domain.c_min <= c <= domain.c_max:
                points.append((root, c))
        elif abs(float(h_prime(root))) <= ROOT_TOLERANCE:
            lines.append(root)
    return points, lines


def certify_no_critical_points(field, domain=None):
    """
    dR/dc is a polynomial in t alone, so the field has no critical point
    in the rectangle when that polynomial keeps a positive sign on
    [t_min, t_max]. Otherwise system (dR/dt, dR/dc) = 0 is solved on the
    sign changes.
    """
    domain = domain or field.domain
    g = trim(field.slope)
    if is_zero(g):
        _, lines = critical_points(field, domain)
        degenerate = is_zero(trim(field.intercept.deriv()))
        return CriticalPointCertificate(
            has_critical_points=bool(lines),
            min_dRdc_on_domain=0.0,
            min_location=domain.t_min,
            method='dR/dc vanishes identically; critical set is where dR/dt = 0',
            dRdc_roots=(),
            critical_points=tuple((t, None) for t in lines) if not degenerate else (),
            degenerate=degenerate,
        )

    roots = isolate_roots(g, domain.t_min, domain.t_max)
    candidates = _extremum_candidates(g, domain.t_min, domain.t_max)
    values = [float(g(t)) for t in candidates]
    index = int(np.argmin(values))
    min_value, min_location = values[index], candidates[index]

    points, lines = ([], []) if not roots else critical_points(field, domain)
    method = (
        'Sturm sequence count of real roots of dR/dc on [%g, %g]: %d; '
        'minimum over endpoints and stationary points of dR/dc'
        % (domain.t_min, domain.t_max, len(roots)))
    if roots:
        method += '; 2-D solve of the gradient system on the sign changes'
    logger.debug('Critical point certificate: roots=%s min=%s at %s', roots, min_value, min_location)
    return CriticalPointCertificate(
        has_critical_points=bool(points or lines),
        min_dRdc_on_domain=min_value,
        min_location=min_location,
        method=method,
        dRdc_roots=tuple(roots),
        critical_points=tuple(points) + tuple((t, None) for t in lines),
    )


def _check_domain(field, domain):
    if not field.domain.includes(domain):
        raise DomainError(
            'Domain %s lies outside the field domain %s.'
            % (domain.as_tuple(), field.domain.as_tuple()))


def mean_risk(field, domain=None):
    """
    Mean of R over the rectangle from polynomial antiderivatives:
    integral = (int c dc)(int g dt) + (int dc)(int h dt).
    """
    domain = domain or field.domain
    _check_domain(field, domain)
    g_int = field.slope.integ()
    h_int = field.intercept.integ()
    int_g = float(g_int(domain.t_max) - g_int(domain.t_min))
    int_h = float(h_int(domain.t_max) - h_int(domain.t_min))
    int_c = 0.5 * (domain.c_max ** 2 - domain.c_min ** 2)
    width_c = domain.c_max - domain.c_min
    return (int_c * int_g + width_c * int_h) / domain.area


def simpson_mean_risk(field, domain=None, points=401):
    """Composite Simpson quadrature of the same mean, used as an oracle."""
    domain = domain or field.domain
    ts = np.linspace(domain.t_min, domain.t_max, points)
    cs = np.linspace(domain.c_min, domain.c_max, points)
    values = field(ts[:, None], cs[None, :])
    inner = integrate.simpson(values, x=cs, axis=1)
    return float(integrate.simpson(inner, x=ts)) / domain.area


@dataclass(frozen=True)
class RegionEstimate:
    area: float
    standard_error: float = 0.0
    method: str = 'exact'
    samples: int = 0
    breakpoints: tuple = field(default=())

    def to_dict(self):
        return {
            'area': self.area,
            'standard_error': self.standard_error,
            'method': self.method,
            'samples': self.samples,
        }


def monte_carlo_area(field, domain, threshold=1.0, samples=1_000_000, seed=0):
    """Seeded uniform sampling of the region R >= threshold."""
    rng = np.random.default_rng(seed)
    t = rng.uniform(domain.t_min, domain.t_max, samples)
    c = rng.uniform(domain.c_min, domain.c_max, samples)
    p = float(np.count_nonzero(field(t, c) >= threshold)) / samples
    return RegionEstimate(
        area=p * domain.area,
        standard_error=domain.area * float(np.sqrt(p * (1.0 - p) / samples)),
        method='monte_carlo',
        samples=samples,
    )


def _clamp_breakpoints(field, domain, threshold):
    points = set()
    for c in (domain.c_min, domain.c_max):
        level = trim(field.at_concentration(c) - threshold)
        if is_zero(level):
            continue
        for t in isolate_roots(level, domain.t_min, domain.t_max):
            if domain.t_min < t < domain.t_max:
                points.add(t)
    return tuple(sorted(points))


def risk_region_area(field, domain=None, threshold=1.0, samples=1_000_000, seed=0):
    """
    Area of {R >= threshold} in the rectangle.

    With dR/dc = g(t) of one sign the region is bounded by the curve
    c = (threshold - h(t)) / g(t), so the area reduces to a single integral
    in t, split where the curve crosses c_min or c_max. When g vanishes on
    the t-range the estimate falls back to seeded Monte Carlo.
    """
    domain = domain or field.domain
    _check_domain(field, domain)
    g = trim(field.slope)
    h = field.intercept
    if is_zero(g) or isolate_roots(g, domain.t_min, domain.t_max):
        logger.info('dR/dc vanishes on the t-range, estimating the risk region by Monte Carlo')
        return monte_carlo_area(field, domain, threshold, samples, seed)

    positive = float(g(0.5 * (domain.t_min + domain.t_max))) > 0

    def width(t):
        boundary = (threshold - h(t)) / g(t)
        clamped = min(max(boundary, domain.c_min), domain.c_max)
        if positive:
            return domain.c_max - clamped
        return clamped - domain.c_min

    breakpoints = _clamp_breakpoints(field, domain, threshold)
    area, error = integrate.quad(
        width, domain.t_min, domain.t_max,
        points=breakpoints or None, epsabs=1e-10, epsrel=1e-10, limit=200)
    logger.debug('Risk region area %.10f (quadrature error %.2e, breakpoints %s)',
                 area, error, breakpoints)
    area = min(max(area, 0.0), domain.area)
    return RegionEstimate(area=area, standard_error=0.0, method='exact', breakpoints=breakpoints)


def risk_probability(field, domain=None, threshold=1.0, samples=1_000_000, seed=0):
    domain = domain or field.domain
    return risk_region_area(field, domain, threshold, samples, seed).area / domain.area

"""
Gaussian curvature of the risk surface, the graph (t, c, R(t, c)).

    K = (R_tt R_cc - R_tc^2) / (1 + R_t^2 + R_c^2)^2

For fields affine in c the R_cc term vanishes symbolically, so K is the
negated square of the mixed partial over a positive denominator and its
zero set is made of vertical lines t = t* where R_tc(t*) = 0.
"""
import logging
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from djapps.core.polynomials import is_zero, isolate_roots, trim
from djapps.stagemap.mapping import default_stage_map


logger = logging.getLogger(__name__)

SEARCH_INTERVAL = (1.0, 6.0)
SEARCH_GRID = 101
REPORT_DECIMALS = 2


def as_surface(field):
    """BivariatePolynomial view of a RiskField; other surfaces pass through."""
    return field.as_surface() if hasattr(field, 'as_surface') else field


def second_partials(field, t, c):
    surface = as_surface(field)
    return (surface.partial(dt=2)(t, c),
            surface.partial(dt=1, dc=1)(t, c),
            surface.partial(dc=2)(t, c))


def gaussian_curvature(field, t, c):
    surface = as_surface(field)
    r_t = surface.partial(dt=1)(t, c)
    r_c = surface.partial(dc=1)(t, c)
    r_tt, r_tc, r_cc = second_partials(surface, t, c)
    value = (r_tt * r_cc - r_tc ** 2) / (1.0 + r_t ** 2 + r_c ** 2) ** 2
    return float(value) if np.ndim(value) == 0 else value


def mixed_partial(field):
    """R_tc as a univariate polynomial in t (affine-in-c fields)."""
    return trim(field.slope.deriv())


@dataclass(frozen=True)
class CurvatureReport:
    max_curvature_on_domain: float
    max_location: tuple
    zero_loci: tuple
    critical_ages: tuple
    extrapolated: tuple
    is_hadamard: bool
    method: str
    search_interval: tuple = SEARCH_INTERVAL
    degenerate: bool = False

    @property
    def annotations(self):
        """Age labels such as ``'26.4 y'`` or ``'105 y (extrapolated)'``."""
        labels = []
        for age, outside in zip(self.critical_ages, self.extrapolated):
            label = '%s y' % np.format_float_positional(round(age, 1), trim='-')
            labels.append(label + ' (extrapolated)' if outside else label)
        return labels

    def to_dict(self):
        return {
            'max_curvature_on_domain': self.max_curvature_on_domain,
            'max_location': list(self.max_location),
            'is_hadamard': self.is_hadamard,
            'zero_loci': list(self.zero_loci),
            'zero_loci_rounded': [round(t, REPORT_DECIMALS) for t in self.zero_loci],
            'critical_ages': list(self.critical_ages),
            'critical_age_labels': self.annotations,
            'extrapolated': list(self.extrapolated),
            'search_interval': list(self.search_interval),
            'degenerate': self.degenerate,
            'method': self.method,
        }


def _maximize_curvature(surface, domain):
    ts = np.linspace(domain.t_min, domain.t_max, SEARCH_GRID)
    cs = np.linspace(domain.c_min, domain.c_max, SEARCH_GRID)
    values = gaussian_curvature(surface, ts[:, None], cs[None, :])
    i, j = np.unravel_index(int(np.argmax(values)), values.shape)
    best_value, best_point = float(values[i, j]), (float(ts[i]), float(cs[j]))
    result = optimize.minimize(
        lambda x: -gaussian_curvature(surface, x[0], x[1]),
        x0=np.array(best_point),
        method='L-BFGS-B',
        bounds=[(domain.t_min, domain.t_max), (domain.c_min, domain.c_max)],
    )
    if result.success and -result.fun > best_value:
        best_value, best_point = float(-result.fun), (float(result.x[0]), float(result.x[1]))
    logger.debug('Curvature search: max %.6g at %s', best_value, best_point)
    return best_value, best_point


def critical_ages(field, interval=SEARCH_INTERVAL, domain=None, stage_map=None):
    """
    Zero-curvature loci on ``interval``: the real roots of R_tc, mapped to
    ages through the stage map. Loci outside the field domain are flagged
    as extrapolated.
    """
    domain = domain or field.domain
    stage_map = stage_map or default_stage_map()
    cubic = mixed_partial(field)
    lo, hi = interval
    if is_zero(cubic):
        return CurvatureReport(
            max_curvature_on_domain=0.0,
            max_location=(domain.t_min, domain.c_min),
            zero_loci=(),
            critical_ages=(),
            extrapolated=(),
            is_hadamard=True,
            method='R_tc vanishes identically; every point is a zero-curvature locus',
            search_interval=(lo, hi),
            degenerate=True,
        )
    loci = tuple(isolate_roots(cubic, lo, hi))
    ages = tuple(float(stage_map.stage_to_age(t)) for t in loci)
    outside = tuple(not domain.t_min <= t <= domain.t_max for t in loci)
    inside = [t for t, flag in zip(loci, outside) if not flag]
    if inside:
        max_value, max_location = 0.0, (inside[0], domain.c_min)
        method = 'K = -(R_tc)^2 / (1 + |grad R|^2)^2 vanishes on the zero loci inside the domain'
    else:
        max_value, max_location = _maximize_curvature(as_surface(field), domain)
        method = ('K = -(R_tc)^2 / (1 + |grad R|^2)^2 < 0 on the domain; '
                  'supremum by grid search refined with L-BFGS-B')
    return CurvatureReport(
        max_curvature_on_domain=max_value,
        max_location=max_location,
        zero_loci=loci,
        critical_ages=ages,
        extrapolated=outside,
        is_hadamard=max_value <= 0.0,
        method=method,
        search_interval=(lo, hi),
    )


def certify_hadamard(field, domain=None, interval=None):
    """
    Nonpositive curvature certificate. Affine-in-c fields are structurally
    nonpositive and only the supremum is located; other surfaces are
    extremized numerically over the domain. Zero loci are searched on
    ``interval``, by default the wide age interval when no domain is given
    and the domain t-range otherwise.
    """
    surface = as_surface(field)
    if interval is None:
        interval = SEARCH_INTERVAL if domain is None else (domain.t_min, domain.t_max)
    if domain is None:
        domain = field.domain
    if surface.is_affine_in_c and hasattr(field, 'slope'):
        return critical_ages(field, interval, domain)
    max_value, max_location = _maximize_curvature(surface, domain)
    return CurvatureReport(
        max_curvature_on_domain=max_value,
        max_location=max_location,
        zero_loci=(),
        critical_ages=(),
        extrapolated=(),
        is_hadamard=max_value <= 0.0,
        method='full curvature numerator; supremum by grid search refined with L-BFGS-B',
        search_interval=(domain.t_min, domain.t_max),
    )


def curvature_profile(field, interval=SEARCH_INTERVAL, points=241):
    """Samples of k(t) = -(R_tc(t))^2 over ``interval``."""
    ts = np.linspace(interval[0], interval[1], points)
    cubic = mixed_partial(field)
    return [(float(t), float(-cubic(t) ** 2)) for t in ts]

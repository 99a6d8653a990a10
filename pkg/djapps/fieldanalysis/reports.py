import logging

from djapps.fieldanalysis.analysis import (
    certify_no_critical_points,
    mean_risk,
    monte_carlo_area,
    risk_region_area,
    simpson_mean_risk,
)
from djapps.fieldanalysis.contours import level_curves


logger = logging.getLogger(__name__)


def analyze(field, domain=None, threshold=1.0, levels=(1.0,), grid=256, seed=0,
            samples=1_000_000):
    """
    Mean risk, critical region, certificate and level curves as one report.

    Returns the JSON-ready report and the LevelCurveSet list it was built from.
    """
    domain = domain or field.domain
    certificate = certify_no_critical_points(field, domain)
    region = risk_region_area(field, domain, threshold, samples, seed)
    oracle = monte_carlo_area(field, domain, threshold, samples, seed)
    curves = level_curves(field, domain, levels, grid)
    logger.info('Analyzed field on %s: region %.4f of %.4f', domain.as_tuple(),
                region.area, domain.area)
    return {
        'domain': domain.to_dict(),
        'threshold': threshold,
        'mean_risk': mean_risk(field, domain),
        'mean_risk_simpson': simpson_mean_risk(field, domain),
        'region_area': region.area,
        'region_method': region.method,
        'probability': region.area / domain.area,
        'monte_carlo': oracle.to_dict(),
        'certificate': certificate.to_dict(),
        'grid': grid,
        'levels': [curve.to_dict() for curve in curves],
    }, curves

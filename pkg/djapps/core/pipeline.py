"""
Steps behind the management commands. Each step takes the cleaned run
configuration, writes its artefacts into ``config['out']`` and returns
the JSON-ready part of the report.
"""
import logging

import numpy as np
from django.conf import settings

from djapps.core import plots
from djapps.core.utils import flatten, write_csv, write_json, write_svg
from djapps.dynamics.flow import SAMPLE_COLUMNS, check_no_recurrence, default_starts
from djapps.dynamics.tasks import batch_flow
from djapps.exposure.equations import assess
from djapps.exposure.profiles import load_profiles, paper_profiles
from djapps.fieldanalysis.reports import analyze
from djapps.fieldfit.fields import (
    PUBLISHED_MEAN_RISK,
    PUBLISHED_PROBABILITY,
    PUBLISHED_REGION_AREA,
    Rectangle,
    build_field,
    fit_coefficients,
    format_polynomial,
    load_field,
    paper_field,
)
from djapps.fieldfit.tables import (
    PUBLISHED_UNROUNDED_LEADING,
    load_table,
    paper_interpolants,
    paper_risk_table,
)
from djapps.geometry.curvature import SEARCH_INTERVAL, certify_hadamard, curvature_profile


logger = logging.getLogger(__name__)

# trajectories closer than this to an earlier sample count as a return
RECURRENCE_RADIUS = 1e-3


def default_domain():
    return Rectangle.from_string(settings.RISK_DOMAIN)


def resolve_table(config):
    if config['paper_dataset']:
        return paper_risk_table(config['placement'])
    if config['input']:
        return load_table(config['input'])
    return None


def resolve_field(config):
    """The published field, a field fitted from ``--input`` or a saved field."""
    if config['paper_dataset']:
        field = paper_field()
    elif config['input']:
        field = build_field(load_table(config['input']), default_domain())
    else:
        field = load_field(config['field'])
    if config['domain'] is not None:
        field = field.with_domain(config['domain'])
    return field


def _interpolant_listing(concentrations, polynomials):
    return [
        {
            'concentration': c,
            'coefficients': list(p.coef),
            'polynomial': format_polynomial(p),
        }
        for c, p in zip(concentrations, polynomials)
    ]


def fit_step(config):
    out = config['out']
    table = resolve_table(config)
    report = {}
    if table is not None:
        interpolants = table.interpolants()
        report['table'] = table.to_dict()
        report['interpolants'] = _interpolant_listing(table.concentrations, interpolants)
        write_svg(out, 'interpolation.svg', 'svg/interpolation.svg',
                  plots.interpolation_context(table))
    if config['paper_dataset']:
        field = paper_field()
        published = paper_interpolants()
        recovered = fit_coefficients(list(published), list(published.values()))
        report['placement'] = config['placement']
        report['published_unrounded_leading'] = PUBLISHED_UNROUNDED_LEADING
        report['published_interpolants'] = _interpolant_listing(
            list(published), list(published.values()))
        report['regression'] = {
            'a': list(recovered.a),
            'b': list(recovered.b),
            'max_deviation': float(max(
                np.max(np.abs(np.subtract(recovered.a, field.a))),
                np.max(np.abs(np.subtract(recovered.b, field.b))))),
        }
    elif table is not None:
        field = build_field(table, default_domain())
    else:
        field = load_field(config['field'])
    if config['domain'] is not None:
        field = field.with_domain(config['domain'])
    report['field'] = field.to_dict()
    report['slope'] = format_polynomial(field.slope)
    report['intercept'] = format_polynomial(field.intercept)
    write_json(out, 'field.json', field.to_dict())
    write_json(out, 'fit.json', report)
    return report, field


def published_summary():
    """Printed summaries of the published field at threshold 1."""
    return {
        'published_mean_risk': PUBLISHED_MEAN_RISK,
        'published_region_area': PUBLISHED_REGION_AREA,
        'published_probability': PUBLISHED_PROBABILITY,
    }


def analysis_step(config, field):
    report, curves = analyze(
        field,
        field.domain,
        threshold=config['threshold'],
        levels=config['levels'],
        grid=config['grid'],
        seed=config['seed'],
        samples=config['samples'],
    )
    if config['paper_dataset'] and config['domain'] is None and config['threshold'] == 1.0:
        report.update(published_summary())
    write_json(config['out'], 'analysis.json', report)
    write_svg(config['out'], 'contours.svg', 'svg/contours.svg',
              plots.contour_context(field, field.domain, curves, config['threshold']))
    return report


def geometry_step(config, field):
    # a user-given domain restricts the zero-locus search to its t-range
    interval = SEARCH_INTERVAL if config['domain'] is None else (
        field.domain.t_min, field.domain.t_max)
    certificate = certify_hadamard(field, field.domain, interval)
    report = certificate.to_dict()
    if not certificate.degenerate:
        profile = curvature_profile(field, interval)
        write_svg(config['out'], 'curvature.svg', 'svg/curvature.svg',
                  plots.curvature_context(profile, certificate))
    write_json(config['out'], 'geometry.json', report)
    return report, certificate


def flow_step(config, field):
    starts = config['starts'] or default_starts(field.domain)
    trajectories = batch_flow(field, starts, config['step'], config['max_steps'])
    rows, summary = [], []
    for index, (start, trajectory) in enumerate(zip(starts, trajectories)):
        rows.extend([index] + list(sample) for sample in trajectory.samples.tolist())
        summary.append({
            'start': list(start),
            'end': list(trajectory.end),
            'exit_reason': trajectory.exit_reason,
            'samples': len(trajectory),
            'final_tau': float(trajectory.tau[-1]),
            'risk_increasing': bool(np.all(np.diff(trajectory.risk) > 0)),
            'no_recurrence': check_no_recurrence(trajectory, RECURRENCE_RADIUS),
        })
    write_csv(config['out'], 'trajectories.csv', ('trajectory',) + SAMPLE_COLUMNS, rows)
    write_svg(config['out'], 'flow.svg', 'svg/flow.svg',
              plots.flow_context(field, field.domain, None, trajectories))
    report = {'step': config['step'], 'max_steps': config['max_steps'], 'trajectories': summary}
    write_json(config['out'], 'flow.json', report)
    return report


EXPOSURE_COLUMNS = (
    'group', 'concentration', 'reference_dose', 'exposure', 'risk_coefficient',
    'acceptable', 'average_daily_dose', 'consumption_limits.kg_per_day',
    'consumption_limits.meals_per_month', 'consumption_limits.fish_kg_per_day',
    'consumption_limits.fish_meals_per_month', 'break_even_concentration',
)


def exposure_step(config):
    if config['paper_dataset']:
        profiles = paper_profiles()
    else:
        profiles = load_profiles(config['input'])
    assessments = [assess(profile).to_dict() for profile in profiles]
    rows = [flatten(a) for a in assessments]
    write_csv(config['out'], 'exposure.csv', EXPOSURE_COLUMNS,
              [[row[name] for name in EXPOSURE_COLUMNS] for row in rows])
    report = {'profiles': assessments}
    write_json(config['out'], 'exposure.json', report)
    return report

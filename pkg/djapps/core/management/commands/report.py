from djapps.core.management.base import RiskCommand
from djapps.core.pipeline import (
    analysis_step,
    exposure_step,
    fit_step,
    flow_step,
    geometry_step,
)
from djapps.core.utils import write_json


class Command(RiskCommand):
    help = 'Run fit, analyze, geometry, flow and, for the published dataset, exposure.'
    require_levels = True

    def run(self, config):
        fit, field = fit_step(config)
        bundle = {
            'fit': fit,
            'analysis': analysis_step(config, field),
            'geometry': geometry_step(config, field)[0],
            'flow': flow_step(config, field),
        }
        if config['paper_dataset']:
            bundle['exposure'] = exposure_step(config)
        path = write_json(config['out'], 'report.json', bundle)
        self.stdout.write('Report written to %s' % path)

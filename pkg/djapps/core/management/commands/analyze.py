from djapps.core.management.base import RiskCommand
from djapps.core.pipeline import analysis_step, resolve_field


class Command(RiskCommand):
    help = 'Mean risk, critical region, critical point certificate and level curves.'
    require_levels = True

    def run(self, config):
        report = analysis_step(config, resolve_field(config))
        self.stdout.write('mean risk: %.4f' % report['mean_risk'])
        self.stdout.write('region area: %.4f' % report['region_area'])
        self.stdout.write('probability: %.4f' % report['probability'])
        if 'published_region_area' in report:
            self.stdout.write('printed: mean %(published_mean_risk)g, region area %(published_region_area)g, '
                              'probability %(published_probability)g' % report)
        if report['certificate']['has_critical_points']:
            self.stdout.write('critical points: %s' % report['certificate']['critical_points'])
        else:
            self.stdout.write('critical points: none')

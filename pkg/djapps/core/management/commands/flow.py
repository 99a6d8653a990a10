from djapps.core.management.base import RiskCommand
from djapps.core.pipeline import flow_step, resolve_field


class Command(RiskCommand):
    help = 'Integrate the gradient flow of the risk field from a set of starts.'

    def run(self, config):
        report = flow_step(config, resolve_field(config))
        for item in report['trajectories']:
            self.stdout.write('(%g, %g) -> (%.3f, %.3f) %s after %d samples' % (
                item['start'][0], item['start'][1], item['end'][0], item['end'][1],
                item['exit_reason'], item['samples']))

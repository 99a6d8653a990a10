from django.core.management.base import CommandError

from djapps.core.management.base import RiskCommand
from djapps.core.pipeline import exposure_step


class Command(RiskCommand):
    help = 'Risk coefficients and consumption limits of exposure profiles.'

    def run(self, config):
        if config['field']:
            raise CommandError('The exposure command reads profiles: use --input or --paper-dataset.')
        report = exposure_step(config)
        for item in report['profiles']:
            self.stdout.write('%-16s c = %-5g RC = %.3f %s' % (
                item['group'], item['concentration'], item['risk_coefficient'],
                'acceptable' if item['acceptable'] else 'NOT acceptable'))

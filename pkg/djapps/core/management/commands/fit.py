from djapps.core.management.base import RiskCommand
from djapps.core.pipeline import fit_step


class Command(RiskCommand):
    help = 'Interpolate a risk table in t and regress across concentration into a risk field.'

    def run(self, config):
        report, field = fit_step(config)
        for item in report.get('interpolants', []):
            self.stdout.write('c = %g: %s' % (item['concentration'], item['polynomial']))
        self.stdout.write('dR/dc = %s' % report['slope'])
        self.stdout.write('R(t, 0) = %s' % report['intercept'])

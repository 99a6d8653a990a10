from djapps.core.management.base import RiskCommand
from djapps.core.pipeline import geometry_step, resolve_field


class Command(RiskCommand):
    help = 'Gaussian curvature certificate and zero-curvature critical ages.'

    def run(self, config):
        report, certificate = geometry_step(config, resolve_field(config))
        if certificate.degenerate:
            self.stdout.write('R_tc vanishes identically: zero loci everywhere.')
            return
        self.stdout.write('Hadamard surface: %s (max curvature %.3g)'
                          % ('yes' if certificate.is_hadamard else 'no',
                             certificate.max_curvature_on_domain))
        if not certificate.zero_loci:
            self.stdout.write('No zero-curvature loci.')
        for t, label in zip(certificate.zero_loci, certificate.annotations):
            self.stdout.write('t = %.2f: %s' % (t, label))

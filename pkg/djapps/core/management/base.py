import logging

from django.core.management.base import BaseCommand, CommandError

from djapps.core.exceptions import RiskFieldError
from djapps.core.forms import RunConfigForm


logger = logging.getLogger(__name__)


class RiskCommand(BaseCommand):
    """
    Shared options of the risk field commands. Settings give the defaults,
    ``--config`` a JSON file of overrides, and explicit flags win.
    """
    require_source = True
    require_levels = False

    def add_arguments(self, parser):
        parser.add_argument('--paper-dataset', action='store_true', dest='paper_dataset',
                            help='Use the published dataset.')
        parser.add_argument('--input', help='Input table (CSV or JSON).')
        parser.add_argument('--field', help='Fitted field JSON written by the fit command.')
        parser.add_argument('--config', help='JSON file of options.')
        parser.add_argument('--domain', help='tmin,tmax,cmin,cmax')
        parser.add_argument('--levels', help='Comma separated contour levels.')
        parser.add_argument('--threshold', type=float)
        parser.add_argument('--grid', type=int, help='Marching-squares cells per axis.')
        parser.add_argument('--seed', type=int)
        parser.add_argument('--samples', type=int, help='Monte Carlo samples.')
        parser.add_argument('--step', type=float, help='Flow step in dynamic time.')
        parser.add_argument('--max-steps', type=int, dest='max_steps')
        parser.add_argument('--starts', help='Flow start points t:c;t:c')
        parser.add_argument('--placement', help='Node placement of age-group tables.')
        parser.add_argument('--out', help='Output directory.')

    def handle(self, *args, **options):
        try:
            config = RunConfigForm.from_options(
                options, require_source=self.require_source, require_levels=self.require_levels)
            self.run(config)
        except RiskFieldError as exc:
            raise CommandError(str(exc))
        except OSError as exc:
            raise CommandError('%s: %s' % (exc.filename or '', exc.strerror or exc))

    def run(self, config):
        raise NotImplementedError

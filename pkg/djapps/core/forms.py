
from django import forms
from django.conf import settings
from django.utils.translation import gettext_lazy as _

from djapps.core.exceptions import ConfigurationError, DomainError, ParseError
from djapps.core.utils import read_json_file
from djapps.fieldfit.fields import Rectangle
from djapps.fieldfit.tables import NODE_PLACEMENTS


def parse_levels(value):
    if isinstance(value, (list, tuple)):
        return [float(x) for x in value]
    return [float(x) for x in str(value).split(',') if x.strip()]


def parse_starts(value):
    """``'t:c;t:c'`` or a list of pairs."""
    if isinstance(value, (list, tuple)):
        return [(float(t), float(c)) for t, c in value]
    starts = []
    for chunk in str(value).split(';'):
        if chunk.strip():
            t, c = chunk.split(':')
            starts.append((float(t), float(c)))
    return starts


class RunConfigForm(forms.Form):
    """
    Options shared by every command. Exactly one data source is allowed:
    the published dataset, an input table or a fitted field file.
    """
    error_messages = {
        'source': _('Exactly one of --paper-dataset, --input and --field is required.'),
        'levels': _('Enter comma separated numbers.'),
        'levels_empty': _('At least one contour level is required.'),
        'starts': _('Enter start points as t:c;t:c.'),
    }

    paper_dataset = forms.BooleanField(required=False)
    input = forms.CharField(required=False)
    field = forms.CharField(required=False)
    domain = forms.CharField(required=False)
    levels = forms.CharField(required=False)
    threshold = forms.FloatField()
    grid = forms.IntegerField(min_value=16)
    seed = forms.IntegerField(min_value=0)
    samples = forms.IntegerField(min_value=1)
    step = forms.FloatField()
    max_steps = forms.IntegerField(min_value=1)
    starts = forms.CharField(required=False)
    placement = forms.ChoiceField(choices=[(x, x) for x in sorted(NODE_PLACEMENTS)])
    out = forms.CharField()

    def __init__(self, *args, require_source=True, require_levels=False, **kwargs):
        super().__init__(*args, **kwargs)
        self.require_source = require_source
        self.require_levels = require_levels

    @classmethod
    def defaults(cls):
        return {
            'paper_dataset': False,
            'domain': '',
            'levels': ','.join('%g' % x for x in settings.RISK_LEVELS),
            'threshold': settings.RISK_THRESHOLD,
            'grid': settings.RISK_GRID_SIZE,
            'seed': settings.RISK_SEED,
            'samples': settings.RISK_MONTE_CARLO_SAMPLES,
            'step': settings.RISK_FLOW_STEP,
            'max_steps': settings.RISK_FLOW_MAX_STEPS,
            'starts': ';'.join('%g:%g' % tuple(x) for x in settings.RISK_FLOW_STARTS),
            'placement': settings.RISK_NODE_PLACEMENT,
            'out': settings.RISK_OUTPUT_DIR,
        }

    @classmethod
    def from_options(cls, options, **kwargs):
        """
        Built-in settings, then the JSON file named by ``config``, then
        the command-line options that were actually given.
        """
        data = cls.defaults()
        if options.get('config'):
            data.update(read_config(options['config']))
        for name in cls.base_fields:
            value = options.get(name)
            if value is None or (name == 'paper_dataset' and not value):
                continue
            data[name] = value
        for name in ('levels', 'starts'):
            if isinstance(data.get(name), (list, tuple)):
                data[name] = _join(name, data[name])
        form = cls(data=data, **kwargs)
        if not form.is_valid():
            raise ConfigurationError(form.errors)
        return form.cleaned_data

    def clean_domain(self):
        value = self.cleaned_data.get('domain')
        if not value:
            return None
        try:
            return Rectangle.from_string(value)
        except DomainError as exc:
            raise forms.ValidationError(str(exc))

    def clean_levels(self):
        try:
            levels = parse_levels(self.cleaned_data.get('levels') or '')
        except ValueError:
            raise forms.ValidationError(self.error_messages['levels'])
        if self.require_levels and not levels:
            raise forms.ValidationError(self.error_messages['levels_empty'])
        return levels

    def clean_starts(self):
        try:
            return parse_starts(self.cleaned_data.get('starts') or '')
        except ValueError:
            raise forms.ValidationError(self.error_messages['starts'])

    def clean_step(self):
        value = self.cleaned_data.get('step')
        if value is not None and not value > 0:
            raise forms.ValidationError(_('Ensure this value is greater than 0.'))
        return value

    def clean(self):
        cleaned_data = super().clean()
        if self.require_source:
            sources = [bool(cleaned_data.get('paper_dataset')),
                       bool(cleaned_data.get('input')),
                       bool(cleaned_data.get('field'))]
            if sum(sources) != 1:
                raise forms.ValidationError(self.error_messages['source'], code='source')
        return cleaned_data


def _join(name, values):
    if name == 'starts':
        return ';'.join('%s:%s' % (t, c) for t, c in values)
    return ','.join(str(x) for x in values)


def read_config(path):
    try:
        data = read_json_file(path)
    except OSError as exc:
        raise ParseError(exc.strerror or str(exc), path=path) from exc
    if not isinstance(data, dict):
        raise ParseError('Expected a JSON object of options.', path=path)
    if 'domain' in data and isinstance(data['domain'], (list, tuple)):
        data['domain'] = ','.join(str(x) for x in data['domain'])
    return {k.replace('-', '_'): v for k, v in data.items()}

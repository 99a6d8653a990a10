import csv
import io
import logging
from pathlib import Path

from djapps.core.exceptions import ParseError, ValidationFailed
from djapps.core.utils import read_json_file, read_text
from .equations import RFD_ADULTS, RFD_CHILDREN_AND_SENIORS, SUBSTITUTION_FRACTION
from .forms import ExposureProfileForm


logger = logging.getLogger(__name__)

PROFILE_COLUMNS = (
    'group', 'age_min', 'age_max', 'body_weight_kg', 'intake_g_per_month',
    'portions_per_month', 'concentration_mg_per_kg', 'rfd', 'substitution_fraction',
)

# Survey groups with the parameterization that best reproduces the published
# risk coefficients. The babies' body weight is not surveyed.
PUBLISHED_GROUPS = (
    {'group': 'Babies (1-6)', 'age_min': 1, 'age_max': 6, 'body_weight_kg': 16.0,
     'intake_g_per_month': 188.17, 'portions_per_month': 1.3, 'rfd': RFD_CHILDREN_AND_SENIORS},
    {'group': 'Boys (6-12)', 'age_min': 6, 'age_max': 12, 'body_weight_kg': 34.94,
     'intake_g_per_month': 188.17, 'portions_per_month': 1.3, 'rfd': RFD_CHILDREN_AND_SENIORS},
    {'group': 'Men (12-60)', 'age_min': 12, 'age_max': 60, 'body_weight_kg': 73.44,
     'intake_g_per_month': 262.60, 'portions_per_month': 2.6, 'rfd': RFD_ADULTS},
    {'group': 'Senior (60-90)', 'age_min': 60, 'age_max': 90, 'body_weight_kg': 68.85,
     'intake_g_per_month': 193.38, 'portions_per_month': 2.1, 'rfd': RFD_CHILDREN_AND_SENIORS},
)

PUBLISHED_RISK_COEFFICIENTS = {
    'Babies (1-6)': 0.804,
    'Boys (6-12)': 0.342,
    'Men (12-60)': 0.204,
    'Senior (60-90)': 0.388,
}


def published_rows(concentrations=(0.27, 2.43, 3.33)):
    rows = []
    for concentration in concentrations:
        for group in PUBLISHED_GROUPS:
            row = dict(group)
            row['concentration_mg_per_kg'] = concentration
            row['substitution_fraction'] = SUBSTITUTION_FRACTION
            rows.append(row)
    return rows


def build_profiles(rows, numbers=None):
    """
    Validate raw rows with ExposureProfileForm. Every invalid field of
    every row is reported at once, under its entry in ``numbers`` (1-based
    positions by default).
    """
    profiles, errors = [], []
    if numbers is None:
        numbers = range(1, len(rows) + 1)
    for number, row in zip(numbers, rows):
        form = ExposureProfileForm(data=row)
        if form.is_valid():
            profiles.append(form.to_profile())
            continue
        for field, messages in form.errors.items():
            for message in messages:
                errors.append((number, field, message))
    if errors:
        raise ValidationFailed(errors)
    return profiles


def paper_profiles(concentrations=(0.27, 2.43, 3.33)):
    return build_profiles(published_rows(concentrations))


def read_profiles_csv(path):
    reader = csv.DictReader(io.StringIO(read_text(path), newline=''))
    if not reader.fieldnames:
        raise ParseError('Empty profile file.', row=1, path=path)
    missing = [c for c in PROFILE_COLUMNS if c not in reader.fieldnames
               and c != 'substitution_fraction']
    if missing:
        raise ParseError('Missing columns: %s' % ', '.join(missing), row=reader.line_num, path=path)
    rows, numbers = [], []
    for row in reader:
        if not any((v or '').strip() for v in row.values() if isinstance(v, str)):
            continue
        rows.append(row)
        # physical line on which the record ends
        numbers.append(reader.line_num)
    return build_profiles(rows, numbers)


def read_profiles_json(path):
    data = read_json_file(path)
    if isinstance(data, dict):
        data = data.get('profiles')
    if not isinstance(data, list) or not all(isinstance(x, dict) for x in data):
        raise ParseError('Expected a list of profile objects.', path=path)
    return build_profiles(data)


def load_profiles(path):
    path = Path(path)
    if path.suffix.lower() == '.json':
        profiles = read_profiles_json(path)
    else:
        profiles = read_profiles_csv(path)
    logger.info('Loaded %d exposure profile(s) from %s', len(profiles), path)
    return profiles

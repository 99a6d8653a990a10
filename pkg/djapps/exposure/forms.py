from django import forms
from django.utils.translation import gettext_lazy as _

from .equations import (
    LIFE_EXPECTANCY_YEARS,
    SUBSTITUTION_FRACTION,
    WEEKS_PER_YEAR,
    ExposureProfile,
)


MONTHS_PER_YEAR = 12.0


class ExposureProfileForm(forms.Form):
    """
    One row of a survey profile file. The survey's average intake is the
    mass eaten per consumption event; the weekly schedule is derived from
    the monthly number of portions.
    """
    error_messages = {
        'positive': _('Ensure this value is greater than 0.'),
        'age_order': _('age_max must be greater than age_min.'),
        'too_frequent': _('At most 7 consumption days per week are possible.'),
    }

    group = forms.CharField(max_length=100)
    age_min = forms.FloatField(min_value=0)
    age_max = forms.FloatField(min_value=0)
    body_weight_kg = forms.FloatField()
    intake_g_per_month = forms.FloatField()
    portions_per_month = forms.FloatField(min_value=0)
    concentration_mg_per_kg = forms.FloatField(min_value=0)
    rfd = forms.FloatField()
    substitution_fraction = forms.FloatField(
        min_value=0, max_value=1, required=False)
    life_expectancy_years = forms.FloatField(required=False)
    exposure_years = forms.FloatField(required=False)
    averaging_years = forms.FloatField(required=False)

    def _clean_positive(self, name):
        value = self.cleaned_data.get(name)
        if value is not None and not value > 0:
            raise forms.ValidationError(self.error_messages['positive'])
        return value

    def clean_body_weight_kg(self):
        return self._clean_positive('body_weight_kg')

    def clean_intake_g_per_month(self):
        return self._clean_positive('intake_g_per_month')

    def clean_rfd(self):
        return self._clean_positive('rfd')

    def clean_life_expectancy_years(self):
        return self._clean_positive('life_expectancy_years')

    def clean_exposure_years(self):
        return self._clean_positive('exposure_years')

    def clean_averaging_years(self):
        return self._clean_positive('averaging_years')

    def clean_portions_per_month(self):
        value = self.cleaned_data.get('portions_per_month')
        if value is not None and value * MONTHS_PER_YEAR / WEEKS_PER_YEAR > 7:
            raise forms.ValidationError(self.error_messages['too_frequent'])
        return value

    def clean(self):
        cleaned_data = super().clean()
        age_min = cleaned_data.get('age_min')
        age_max = cleaned_data.get('age_max')
        if age_min is not None and age_max is not None and age_max <= age_min:
            self.add_error('age_max', self.error_messages['age_order'])
        return cleaned_data

    def to_profile(self):
        data = self.cleaned_data
        span = data['age_max'] - data['age_min']
        substitution = data.get('substitution_fraction')
        return ExposureProfile(
            group=data['group'],
            concentration=data['concentration_mg_per_kg'],
            intake_rate=data['intake_g_per_month'] / 1000.0,
            body_weight=data['body_weight_kg'],
            exposure_days_per_week=data['portions_per_month'] * MONTHS_PER_YEAR / WEEKS_PER_YEAR,
            exposure_years=data.get('exposure_years') or span,
            averaging_years=data.get('averaging_years') or span,
            substitution_fraction=SUBSTITUTION_FRACTION if substitution is None else substitution,
            reference_dose=data['rfd'],
            life_expectancy=data.get('life_expectancy_years') or LIFE_EXPECTANCY_YEARS,
        )

from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class FieldAnalysisConfig(AppConfig):
    name = 'djapps.fieldanalysis'
    verbose_name = _('Risk field analysis')

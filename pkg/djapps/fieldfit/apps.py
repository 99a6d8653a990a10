from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class FieldFitConfig(AppConfig):
    name = 'djapps.fieldfit'
    verbose_name = _('Risk field fitting')

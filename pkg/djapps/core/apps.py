from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class CoreConfig(AppConfig):
    name = 'djapps.core'
    verbose_name = _('Risk field toolkit')

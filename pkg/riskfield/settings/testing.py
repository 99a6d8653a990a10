from .base import *

DEBUG = False

CELERY_BROKER_URL = 'memory://'
CELERY_RESULT_BACKEND = 'cache+memory://'
CELERY_TASK_ALWAYS_EAGER = True
CELERY_TASK_EAGER_PROPAGATES = True

CACHES = {
    'default': {
        'BACKEND': 'django.core.cache.backends.dummy.DummyCache',
    }
}

RISK_LOG_LEVEL = 'WARNING'
LOGGING['loggers']['djapps']['level'] = RISK_LOG_LEVEL

import os
from django.utils.crypto import get_random_string
from decouple import config, Csv


BASE_DIR = os.path.dirname(
    os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

PROJECT_NAME = config('PROJECT_NAME', default='riskfield')

SECRET_KEY = config('SECRET_KEY', default=get_random_string(50))

DEBUG = True


# Application definition

INSTALLED_APPS = [
    'djapps.core',
    'djapps.exposure',
    'djapps.stagemap',
    'djapps.fieldfit',
    'djapps.fieldanalysis',
    'djapps.dynamics',
    'djapps.geometry',
]

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [
            os.path.join(BASE_DIR, PROJECT_NAME, 'templates'),
        ],
        'OPTIONS': {
            'loaders': [
                'django.template.loaders.filesystem.Loader',
                'django.template.loaders.app_directories.Loader',
            ],
        },
    },
]


# Internationalization
LANGUAGE_CODE = config('LANGUAGE_CODE', default='en')

TIME_ZONE = config('TIME_ZONE', default='UTC')

USE_I18N = True

USE_TZ = True


# Logging
RISK_LOG_LEVEL = config('RISK_LOG_LEVEL', default='INFO')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'djapps': {
            'handlers': ['console'],
            'level': RISK_LOG_LEVEL,
            'propagate': False,
        },
        'django': {
            'handlers': ['console'],
            'level': 'WARNING',
        },
    },
}


# Risk field toolkit
RISK_OUTPUT_DIR = config('RISK_OUTPUT_DIR', default=os.path.join(BASE_DIR, 'output'))
RISK_DOMAIN = config('RISK_DOMAIN', default='1,5,0.2,3.5')
RISK_THRESHOLD = config('RISK_THRESHOLD', default=1.0, cast=float)
RISK_LEVELS = config('RISK_LEVELS', default='1,2,4,6,8,10', cast=Csv(cast=float))
RISK_GRID_SIZE = config('RISK_GRID_SIZE', default=256, cast=int)
RISK_SEED = config('RISK_SEED', default=42, cast=int)
RISK_MONTE_CARLO_SAMPLES = config('RISK_MONTE_CARLO_SAMPLES', default=1000000, cast=int)

# stage:age pairs of the piecewise-linear age map
RISK_STAGE_KNOTS = config(
    'RISK_STAGE_KNOTS',
    default='1:1,2:6,3:12,4:60,5:90',
    cast=Csv(cast=lambda knot: tuple(float(x) for x in knot.split(':')), post_process=tuple),
)
RISK_NODE_PLACEMENT = config('RISK_NODE_PLACEMENT', default='stage_end')

RISK_FLOW_STEP = config('RISK_FLOW_STEP', default=0.001, cast=float)
RISK_FLOW_MAX_STEPS = config('RISK_FLOW_MAX_STEPS', default=20000, cast=int)
# t:c;t:c;... empty means a 3 x 3 interior grid of the domain
RISK_FLOW_STARTS = config(
    'RISK_FLOW_STARTS',
    default='',
    cast=Csv(cast=lambda start: tuple(float(x) for x in start.split(':')),
             delimiter=';', post_process=list),
)
RISK_FLOW_USE_CELERY = config('RISK_FLOW_USE_CELERY', default=False, cast=bool)


# Celery
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
CELERY_ACCEPT_CONTENT = ['json']

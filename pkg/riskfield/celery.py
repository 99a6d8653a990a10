from celery import Celery
from decouple import config


app = Celery(config('PROJECT_NAME', default='riskfield'))

# - namespace='CELERY' means all celery-related configuration keys
#   should have a `CELERY_` prefix.
app.config_from_object('django.conf:settings', namespace='CELERY')

# Load task modules from all registered Django app configs.
app.autodiscover_tasks()

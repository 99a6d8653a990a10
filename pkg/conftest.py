import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'riskfield.settings.testing')
django.setup()

# app/celery.py
import os
from celery import Celery

# Set the default Django settings module
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'app.settings')

# Create the Celery app
app = Celery('teachdim')

# Load settings from Django settings with a namespace
app.config_from_object('django.conf:settings', namespace='CELERY')

# Trial chunks live in explore.tasks
app.autodiscover_tasks()

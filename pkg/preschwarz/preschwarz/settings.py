"""
Django settings for preschwarz project.

The project has no web surface: Django provides the settings layer,
management commands, forms for flag validation and the template engine
used for text and SVG reports.
"""

import os

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def _env_int(name, default):
    value = os.getenv(name, '')
    try:
        return int(value) if value.strip() else default
    except ValueError:
        return default


# Required by Django; nothing in the project signs data with it.
SECRET_KEY = os.getenv('PRESCHWARZ_SECRET_KEY', 'preschwarz-local-key')

DEBUG = False

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'core.apps.CoreConfig',
    'analytic.apps.AnalyticConfig',
    'maminda.apps.MamindaConfig',
    'rootfind.apps.RootfindConfig',
    'bounds.apps.BoundsConfig',
    'supnorm.apps.SupnormConfig',
    'geometry.apps.GeometryConfig',
    'reports.apps.ReportsConfig',
]

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [],
        },
    },
]

# Nothing is persisted.
DATABASES = {}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# Logging

LOG_LEVEL = os.getenv('PRESCHWARZ_LOG_LEVEL', 'WARNING').upper()

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        }
        for app in (
            'analytic', 'maminda', 'rootfind', 'bounds',
            'supnorm', 'geometry', 'reports',
        )
    },
}


# Numerics

# 0 means one worker per CPU.
PRESCHWARZ_THREADS = _env_int('PRESCHWARZ_THREADS', 0)

PRESCHWARZ_GRID = (512, 1024)
PRESCHWARZ_R_MAX = 1 - 1e-8

PRESCHWARZ_SERIES_TERMS = 64

PRESCHWARZ_MEMBER_GRID = (64, 256)
PRESCHWARZ_MEMBER_R_MAX = 0.95

PRESCHWARZ_TABLE_TOLERANCE = 1e-5
PRESCHWARZ_VERIFY_TOLERANCE = 1e-4

PRESCHWARZ_PUBLISHED_TABLES = os.path.join(
    BASE_DIR, 'reports', 'fixtures', 'published_tables.csv'
)

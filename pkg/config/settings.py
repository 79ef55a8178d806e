"""
Django settings for the rootcount project.

The project is driven from the command line (manage.py count/tree/oracle/bench)
with a small JSON API on top. Engine tunables live in ROOTCOUNT below.
"""

import os
from pathlib import Path

import dj_database_url

from rootcount import constants

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get("SECRET_KEY", "django-insecure-rootcount-local-only")

DEBUG = os.environ.get("DEBUG", "False").lower() in ("1", "true", "yes")

ALLOWED_HOSTS = [h for h in os.environ.get("ALLOWED_HOSTS", "localhost,127.0.0.1").split(",") if h]


# Application definition

INSTALLED_APPS = [
    "django.contrib.contenttypes",
    "rootcount",
]

MIDDLEWARE = [
    "django.middleware.security.SecurityMiddleware",
    "django.middleware.common.CommonMiddleware",
]

ROOT_URLCONF = "config.urls"

WSGI_APPLICATION = "config.wsgi.application"


# Database (run history only; counting never touches it)

DATABASES = {
    "default": dj_database_url.config(
        default=f"sqlite:///{BASE_DIR / 'db.sqlite3'}",
        conn_max_age=600,
    )
}

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

LANGUAGE_CODE = "en-us"
TIME_ZONE = "UTC"
USE_I18N = False
USE_TZ = True


# Root counting engine

def _env_int(name, default):
    return int(os.environ.get(name, default))


ROOTCOUNT = {
    "SEED": _env_int("ROOTCOUNT_SEED", constants.DEFAULT_SEED),
    "MAX_BRUTE": _env_int("ROOTCOUNT_MAX_BRUTE", constants.DEFAULT_MAX_BRUTE),
    "SMALL_P_THRESHOLD": _env_int("ROOTCOUNT_SMALL_P_THRESHOLD", constants.SMALL_P_THRESHOLD),
    "SPLIT_BUDGET_BASE": _env_int("ROOTCOUNT_SPLIT_BUDGET_BASE", constants.SPLIT_BUDGET_BASE),
    "MAX_DEGREE": _env_int("ROOTCOUNT_MAX_DEGREE", constants.MAX_DEGREE),
    "BENCH_FACTORS": _env_int("ROOTCOUNT_BENCH_FACTORS", constants.BENCH_FACTORS),
}


# Error reporting (opt-in)

SENTRY_DSN = os.environ.get("SENTRY_DSN")
if SENTRY_DSN:
    import sentry_sdk
    from sentry_sdk.integrations.django import DjangoIntegration

    sentry_sdk.init(dsn=SENTRY_DSN, integrations=[DjangoIntegration()])


# Logging Configuration
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{levelname} {asctime} {module} {process:d} {thread:d} {message}",
            "style": "{",
        },
        "simple": {
            "format": "{levelname} {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "simple",
        },
        "console_verbose": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "loggers": {
        "django": {
            "handlers": ["console"],
            "level": "INFO",
        },
        "rootcount": {
            "handlers": ["console_verbose"],
            "level": os.environ.get("ROOTCOUNT_LOG_LEVEL", "WARNING"),
            "propagate": False,
        },
    },
}

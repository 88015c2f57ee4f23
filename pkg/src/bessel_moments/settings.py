"""Django settings used by the `bm` console script.

Projects installing `bessel_moments` as an app provide their own `BESSEL_MOMENTS`
dictionary and a `bessel_moments` cache alias instead.
"""

from __future__ import annotations

import os
from pathlib import Path

from .typing import BesselMomentsSettingsDict

SECRET_KEY = "bessel-moments-cli"

DEBUG = False

INSTALLED_APPS = ["bessel_moments"]

USE_TZ = True

CACHES = {
    "default": {
        "BACKEND": "django.core.cache.backends.locmem.LocMemCache",
    },
    "bessel_moments": {
        "BACKEND": "django.core.cache.backends.filebased.FileBasedCache",
        "LOCATION": os.environ.get("BM_CACHE_DIR", str(Path.home() / ".cache" / "bessel-moments")),
        "TIMEOUT": None,
        "OPTIONS": {"MAX_ENTRIES": 1_000_000},
    },
}

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {"format": "%(asctime)s %(levelname)s %(name)s: %(message)s"},
    },
    "handlers": {
        "console": {"class": "logging.StreamHandler", "formatter": "plain"},
    },
    "loggers": {
        "bessel_moments": {
            "handlers": ["console"],
            "level": os.environ.get("BM_LOG_LEVEL", "WARNING"),
            "propagate": False,
        },
    },
}

BESSEL_MOMENTS: BesselMomentsSettingsDict = {}

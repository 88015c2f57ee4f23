import os

SECRET_KEY = "bessel-moments-tests"

INSTALLED_APPS = ["bessel_moments"]

USE_TZ = True

CACHES = {
    "default": {
        "BACKEND": "django.core.cache.backends.locmem.LocMemCache",
    },
    "bessel_moments": {
        "BACKEND": "django.core.cache.backends.filebased.FileBasedCache",
        "LOCATION": os.environ["BM_CACHE_DIR"],
        "TIMEOUT": None,
    },
}

BESSEL_MOMENTS = {
    "VERIFY": {
        "DIGITS": 20,
        "JYM_DIGITS": 15,
        "ZETA71_PRIME_BOUND": 200,
    },
}

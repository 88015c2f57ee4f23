from pathlib import Path

import pytest
from django.conf import LazySettings
from helpers import initialize_django

from bessel_moments.mpcore import PrecisionContext
from bessel_moments.verify import ResultCache


@pytest.fixture(scope="session", autouse=True)
def django_settings(tmp_path_factory: pytest.TempPathFactory) -> LazySettings:
    _, settings = initialize_django("testsettings", Path(__file__).parent, tmp_path_factory.mktemp("bm-cache"))
    return settings


@pytest.fixture(scope="session")
def ctx() -> PrecisionContext:
    return PrecisionContext(20)


@pytest.fixture
def result_cache() -> ResultCache:
    cache = ResultCache("bessel_moments")
    cache.clear()
    return cache

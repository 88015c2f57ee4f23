import pytest

from bessel_moments.app_settings import BesselMomentsSettings
from bessel_moments.mpcore import PrecisionContext


class MockSettings:
    """A mock class that supports getattr."""

    BESSEL_MOMENTS = {
        "GUARD_DIGITS": 25,  # Default is `15`
        "QUADRATURE": {
            "ACCELERATOR": "averaging",  # Default is `"levin"`
        },
        "VERIFY": {
            "DIGITS": 60,  # Default is `50`
            "JOBS": 4,  # Default is `1`
        },
    }


class EmptySettings:
    pass


def test_bessel_moments_settings():
    settings = BesselMomentsSettings.from_django_settings(MockSettings())

    assert settings.GUARD_DIGITS == 25
    assert settings.MAX_GUARD_DIGITS == 400
    assert settings.QUADRATURE.ACCELERATOR == "averaging"
    assert settings.QUADRATURE.PANELS_START == 32
    assert settings.VERIFY.DIGITS == 60
    assert settings.VERIFY.JOBS == 4
    assert settings.VERIFY.CACHE_ALIAS == "bessel_moments"


def test_defaults_without_setting():
    settings = BesselMomentsSettings.from_django_settings(EmptySettings())

    assert settings.GUARD_DIGITS == 15
    assert settings.VERIFY.DIGITS == 50
    assert settings.VERIFY.JYM_DIGITS == 30
    assert settings.VERIFY.KLOOSTERMAN_EXACT_MAX_PRIME == 200


def test_from_django_settings_does_not_mutate():
    BesselMomentsSettings.from_django_settings(MockSettings())
    assert "VERIFY" in MockSettings.BESSEL_MOMENTS


def test_unknown_key():
    class TypoSettings:
        BESSEL_MOMENTS = {"VERIFY": {"DIGIT": 30}}

    with pytest.raises(TypeError):
        BesselMomentsSettings.from_django_settings(TypoSettings())


def test_precision_context_from_settings():
    settings = BesselMomentsSettings.from_django_settings(MockSettings())
    ctx = PrecisionContext.from_settings(settings)

    assert ctx.digits == 60
    assert ctx.guard == 25
    assert ctx.working_digits == 85
    assert PrecisionContext.from_settings(settings, 30).digits == 30

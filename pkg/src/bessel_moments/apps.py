from django.apps import AppConfig


class BesselMomentsAppConfig(AppConfig):
    name = "bessel_moments"
    verbose_name = "Bessel moments"

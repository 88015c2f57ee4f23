from __future__ import annotations

from typing import Any, Literal

from django.conf import settings
from django.core.management.base import BaseCommand, CommandParser

from bessel_moments._compat import Unpack
from bessel_moments.app_settings import BesselMomentsSettings
from bessel_moments.verify import SCHEMA_VERSION, ResultCache

from ._utils import BaseOptions, command_errors, configure_verbosity

bm_settings = BesselMomentsSettings.from_django_settings(settings)


class CommandOptions(BaseOptions):
    action: Literal["clear", "stats"]


class Command(BaseCommand):
    help = "Inspect or clear the cache of computed values."

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("action", choices=["clear", "stats"])

    def handle(self, *args: Any, **options: Unpack[CommandOptions]) -> None:
        configure_verbosity(options["verbosity"])
        cache = ResultCache(bm_settings.VERIFY.CACHE_ALIAS)
        with command_errors():
            if options["action"] == "clear":
                cache.clear()
                self.stdout.write(self.style.SUCCESS("Cache cleared."))
                return
            stats = cache.stats()
        self.stdout.write(f"alias    {stats['alias']}")
        self.stdout.write(f"location {stats['location']}")
        self.stdout.write(f"entries  {stats['entries']}")
        self.stdout.write(f"schema   v{SCHEMA_VERSION}")

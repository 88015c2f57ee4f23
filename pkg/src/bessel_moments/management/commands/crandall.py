from __future__ import annotations

from typing import Any

from django.conf import settings
from django.core.management.base import BaseCommand, CommandParser

from bessel_moments._compat import Unpack
from bessel_moments.app_settings import BesselMomentsSettings
from bessel_moments.moments import crandall_exact, crandall_numeric
from bessel_moments.mpcore import PrecisionContext

from ._utils import PrecisionOptions, command_errors, configure_verbosity, positive_int

bm_settings = BesselMomentsSettings.from_django_settings(settings)


class CommandOptions(PrecisionOptions):
    m: int
    n: int
    exact: bool


class Command(BaseCommand):
    help = "Evaluate the Crandall number C(m, n)."

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("m", type=positive_int)
        parser.add_argument("n", type=positive_int)
        parser.add_argument(
            "--exact",
            action="store_true",
            help="Use the exact Hankel expansion instead of Bessel moments.",
        )
        parser.add_argument(
            "--digits",
            type=positive_int,
            help="Number of significant digits.",
            default=bm_settings.VERIFY.DIGITS,
        )

    def handle(self, *args: Any, **options: Unpack[CommandOptions]) -> None:
        configure_verbosity(options["verbosity"])
        with command_errors():
            if options["exact"]:
                self.stdout.write(str(crandall_exact(options["m"], options["n"])))
                return
            ctx = PrecisionContext.from_settings(bm_settings, options["digits"])
            self.stdout.write(ctx.render(crandall_numeric(options["m"], options["n"], ctx)))

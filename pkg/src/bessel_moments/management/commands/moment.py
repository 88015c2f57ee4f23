from __future__ import annotations

from typing import Any, Literal

from django.conf import settings
from django.core.management.base import BaseCommand, CommandParser

from bessel_moments._compat import Unpack
from bessel_moments.app_settings import BesselMomentsSettings
from bessel_moments.moments import ikm, jym
from bessel_moments.mpcore import PrecisionContext

from ._utils import PrecisionOptions, command_errors, configure_verbosity, positive_int

bm_settings = BesselMomentsSettings.from_django_settings(settings)


class CommandOptions(PrecisionOptions):
    kind: Literal["ikm", "jym"]
    a: int
    b: int
    n: int


class Command(BaseCommand):
    help = "Evaluate a Bessel moment IKM(a,b;n) or JYM(a,b;n)."

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("kind", choices=["ikm", "jym"], help="IKM for I0^a K0^b, JYM for J0^a Y0^b.")
        parser.add_argument("a", type=int)
        parser.add_argument("b", type=int)
        parser.add_argument("n", type=int, help="Power of t in the integrand.")
        parser.add_argument(
            "--digits",
            type=positive_int,
            help="Number of significant digits.",
            default=bm_settings.VERIFY.DIGITS,
        )

    def handle(self, *args: Any, **options: Unpack[CommandOptions]) -> None:
        configure_verbosity(options["verbosity"])
        ctx = PrecisionContext.from_settings(bm_settings, options["digits"])
        func = ikm if options["kind"] == "ikm" else jym
        with command_errors():
            value = func(options["a"], options["b"], options["n"], ctx)
        self.stdout.write(ctx.render(value))

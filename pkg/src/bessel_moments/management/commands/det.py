from __future__ import annotations

from typing import Any, Literal

from django.conf import settings
from django.core.management.base import BaseCommand, CommandParser

from bessel_moments._compat import Unpack
from bessel_moments.app_settings import BesselMomentsSettings
from bessel_moments.moments import closed_constant, det_numeric
from bessel_moments.mpcore import PrecisionContext, digits_of_agreement

from ._utils import PrecisionOptions, command_errors, configure_verbosity, positive_int

bm_settings = BesselMomentsSettings.from_django_settings(settings)


class CommandOptions(PrecisionOptions):
    kind: Literal["M", "N"]
    k: int


class Command(BaseCommand):
    help = "Compare the determinant of a Broadhurst-Mellit matrix with its closed form."

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("kind", choices=["M", "N"])
        parser.add_argument("k", type=positive_int, help="Size of the matrix.")
        parser.add_argument(
            "--digits",
            type=positive_int,
            help="Number of significant digits.",
            default=bm_settings.VERIFY.DIGITS,
        )

    def handle(self, *args: Any, **options: Unpack[CommandOptions]) -> None:
        configure_verbosity(options["verbosity"])
        ctx = PrecisionContext.from_settings(bm_settings, options["digits"])
        kind, k = options["kind"], options["k"]
        with command_errors():
            numeric = det_numeric(kind, k, ctx)
            closed = closed_constant(f"det{kind}({k})", ctx)
        self.stdout.write(f"numeric {ctx.render(numeric)}")
        self.stdout.write(f"closed  {ctx.render(closed)}")
        self.stdout.write(f"matched {digits_of_agreement(numeric, closed, ctx)} significant digits")

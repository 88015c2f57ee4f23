from __future__ import annotations

from typing import Any

from django.conf import settings
from django.core.management.base import BaseCommand, CommandParser

from bessel_moments._compat import Unpack
from bessel_moments.app_settings import BesselMomentsSettings
from bessel_moments.lfunc import lambda_completed, lvalue
from bessel_moments.modular import NEWFORMS
from bessel_moments.mpcore import PrecisionContext

from ._utils import PrecisionOptions, command_errors, configure_verbosity, positive_int

bm_settings = BesselMomentsSettings.from_django_settings(settings)


class CommandOptions(PrecisionOptions):
    form: str
    s: int
    completed: bool


class Command(BaseCommand):
    help = "Evaluate the L-function of one of the weight 3, 4 and 6 newforms at an integer."

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("form", type=str.upper, choices=list(NEWFORMS))
        parser.add_argument("s", type=positive_int)
        parser.add_argument(
            "--completed",
            action="store_true",
            help="Evaluate the completed L-function Lambda(f, s).",
        )
        parser.add_argument(
            "--digits",
            type=positive_int,
            help="Number of significant digits.",
            default=bm_settings.VERIFY.DIGITS,
        )

    def handle(self, *args: Any, **options: Unpack[CommandOptions]) -> None:
        configure_verbosity(options["verbosity"])
        ctx = PrecisionContext.from_settings(bm_settings, options["digits"])
        func = lambda_completed if options["completed"] else lvalue
        with command_errors():
            value = func(options["form"], options["s"], ctx)  # type: ignore[arg-type]
        self.stdout.write(ctx.render(value))

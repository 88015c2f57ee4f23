from __future__ import annotations

from typing import Any

from django.core.management.base import BaseCommand, CommandParser

from bessel_moments._compat import Unpack
from bessel_moments.modular import NEWFORMS, newform_coeffs_csv

from ._utils import BaseOptions, command_errors, configure_verbosity, positive_int


class CommandOptions(BaseOptions):
    form: str
    M: int


class Command(BaseCommand):
    help = "Dump the first coefficients of a newform, as CSV."

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("form", type=str.upper, choices=list(NEWFORMS))
        parser.add_argument("M", type=positive_int, help="Number of coefficients.")

    def handle(self, *args: Any, **options: Unpack[CommandOptions]) -> None:
        configure_verbosity(options["verbosity"])
        with command_errors():
            self.stdout.write(newform_coeffs_csv(options["form"], options["M"]), ending="")  # type: ignore[arg-type]

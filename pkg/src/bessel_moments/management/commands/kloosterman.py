from __future__ import annotations

from fractions import Fraction
from typing import Any, get_args

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError, CommandParser

from bessel_moments._compat import Unpack
from bessel_moments.app_settings import BesselMomentsSettings
from bessel_moments.arith import FieldDesc, local_data, local_data_csv, sym_moment
from bessel_moments.typing import KloostermanMethodT

from ._utils import BaseOptions, command_errors, configure_verbosity, positive_int

bm_settings = BesselMomentsSettings.from_django_settings(settings)
verify_settings = bm_settings.VERIFY


class CommandOptions(BaseOptions):
    p: int
    k: int
    n: int
    degree: int | None
    method: KloostermanMethodT | None


class Command(BaseCommand):
    help = "Compute symmetric power moments of Kloosterman sums over a finite field."

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--p", type=positive_int, required=True, help="Characteristic of the field.")
        parser.add_argument("--k", type=positive_int, default=1, help="Degree of the field over F_p.")
        parser.add_argument("--n", type=int, required=True, help="Symmetric power.")
        parser.add_argument(
            "--degree",
            type=positive_int,
            help="Dump S_n(p^k) and c_n(p^k) for k = 1..degree as CSV, with the local factor Z_n(p, T).",
        )
        parser.add_argument(
            "--method",
            choices=get_args(KloostermanMethodT),
            help="Force a path for S_n: cyclotomic and modular are exact, fft is a floating cross-check.",
        )

    def handle(self, *args: Any, **options: Unpack[CommandOptions]) -> None:
        configure_verbosity(options["verbosity"])
        p, n = options["p"], options["n"]
        with command_errors():
            if options["degree"] is not None:
                data = local_data(p, n, options["degree"], verify_settings.KLOOSTERMAN_EXACT_MAX_PRIME)
                self.stdout.write(local_data_csv([data]), ending="")
                self.stdout.write("Z: " + ", ".join(str(c) for c in data.zeta))
                return

            q, limit = p ** options["k"], verify_settings.KLOOSTERMAN_MAX_FIELD
            if q > limit:
                raise CommandError(f"Fields of size {q} exceed KLOOSTERMAN_MAX_FIELD ({limit}).", returncode=1)
            field = FieldDesc.build(p, options["k"])
            S = sym_moment(
                field, n, method=options["method"], exact_max_prime=verify_settings.KLOOSTERMAN_EXACT_MAX_PRIME
            )
        self.stdout.write(f"S_{n}({field.q}) = {S}")
        self.stdout.write(f"c_{n}({field.q}) = {Fraction(-(1 + S), field.q**2)}")

from __future__ import annotations

from pathlib import Path
from typing import Any

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError, CommandParser

from bessel_moments._compat import Unpack
from bessel_moments.app_settings import BesselMomentsSettings
from bessel_moments.mpcore import PrecisionContext
from bessel_moments.typing import ReportFormatT, SuiteT
from bessel_moments.verify import ResultCache, emit_report, run_suite
from bessel_moments.verify.catalog import SUITES

from ._utils import PrecisionOptions, command_errors, configure_verbosity, output_path, positive_int

bm_settings = BesselMomentsSettings.from_django_settings(settings)
verify_settings = bm_settings.VERIFY


class CommandOptions(PrecisionOptions):
    suite: SuiteT
    format: ReportFormatT
    jobs: int
    output: Path | None
    no_cache: bool
    include: list[str] | None
    ignore: list[str] | None


class Command(BaseCommand):
    help = "Run a suite of the identity catalog and report the outcome of every check."

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("suite", choices=SUITES)
        parser.add_argument(
            "--digits",
            type=positive_int,
            help="Number of significant digits.",
            default=verify_settings.DIGITS,
        )
        parser.add_argument(
            "--format",
            choices=["json", "csv", "text"],
            help="Report format.",
            default=verify_settings.FORMAT,
        )
        parser.add_argument(
            "--jobs",
            type=positive_int,
            help="Number of worker processes.",
            default=verify_settings.JOBS,
        )
        parser.add_argument(
            "--output",
            type=output_path,
            help="Write the report to this file instead of the standard output.",
        )
        parser.add_argument(
            "--no-cache",
            action="store_true",
            help="Neither read nor write computed values.",
        )
        parser.add_argument("--include", nargs="*", help="Only run these checks.")
        parser.add_argument("--ignore", nargs="*", help="Checks to be skipped.")

    def handle(self, *args: Any, **options: Unpack[CommandOptions]) -> None:
        configure_verbosity(options["verbosity"])
        ctx = PrecisionContext.from_settings(bm_settings, options["digits"])
        cache = None if options["no_cache"] else ResultCache(verify_settings.CACHE_ALIAS)

        with command_errors():
            report = run_suite(
                options["suite"],
                ctx,
                jobs=options["jobs"],
                cache=cache,
                settings=verify_settings,
                include=options["include"] or (),
                ignore=options["ignore"] or (),
            )
        rendered = emit_report(report, options["format"])

        if options["output"] is not None:
            options["output"].write_text(rendered, encoding="utf-8")
        else:
            self.stdout.write(rendered, ending="")

        if report.exit_code:
            failed = ", ".join(result.id for result in report.theorem_failures)
            raise CommandError(f"Theorem checks failed: {failed}", returncode=report.exit_code)

from __future__ import annotations

import logging
from argparse import ArgumentTypeError
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Literal, TypedDict

from django.core.management.base import CommandError

from bessel_moments.exceptions import BesselMomentsError


def positive_int(value_str: str) -> int:
    try:
        value = int(value_str)
    except ValueError:
        raise ArgumentTypeError(f"{value_str} is not an integer.") from None
    if value < 1:
        raise ArgumentTypeError(f"{value_str} must be a positive integer.")
    return value


def output_path(path_str: str) -> Path:
    path = Path(path_str)
    if not path.parent.is_dir():
        raise ArgumentTypeError(f"The parent directory of {path_str} must exist.")
    return path


def configure_verbosity(verbosity: int) -> None:
    if verbosity >= 2:
        logging.getLogger("bessel_moments").setLevel(logging.DEBUG)


@contextmanager
def command_errors() -> Iterator[None]:
    """Report package errors as command errors with exit status 1."""
    try:
        yield
    except (BesselMomentsError, ValueError) as e:
        raise CommandError(str(e), returncode=1) from e


class BaseOptions(TypedDict):
    verbosity: Literal[0, 1, 2, 3]
    """Verbosity level; 0=minimal output, 1=normal output, 2=verbose output, 3=very verbose output"""

    settings: str | None
    """The Python path to a settings module, e.g. "myproject.settings.main". If this isn't provided,
    the DJANGO_SETTINGS_MODULE environment variable will be used.
    """

    pythonpath: str | None
    """A directory to add to the Python path, e.g. "/home/djangoprojects/myproject"."""

    traceback: bool
    """Raise on CommandError exceptions."""

    no_color: bool
    """Don't colorize the command output."""

    skip_checks: bool
    """Skip system checks."""


class PrecisionOptions(BaseOptions):
    digits: int
    """Requested number of significant decimal digits."""

from __future__ import annotations

import os
import sys

from django.conf import ENVIRONMENT_VARIABLE as DJANGO_SETTINGS_MODULE_ENV_KEY
from django.core.management import ManagementUtility

COMMAND_ALIASES = {
    "eta-coeffs": "eta_coeffs",
}


def main(argv: list[str] | None = None) -> None:
    """Entry point of the `bm` console script."""
    argv = list(sys.argv if argv is None else argv)
    os.environ.setdefault(DJANGO_SETTINGS_MODULE_ENV_KEY, "bessel_moments.settings")
    if len(argv) > 1:
        argv[1] = COMMAND_ALIASES.get(argv[1], argv[1])
    argv[0] = "bm"
    ManagementUtility(argv).execute()


if __name__ == "__main__":
    main()

from __future__ import annotations

__all__ = (
    "SUITES",
    "Expression",
    "IdentityEntry",
    "Operand",
    "catalog",
    "gather_entries",
    "get_entry",
    "in_suite",
)

from typing import Container

from ...app_settings import VerifySettings
from ...exceptions import UnknownSuiteError
from ...typing import SuiteT
from . import kloosterman, lvalues, modular, moments, vanhove
from .base import Expression, IdentityEntry, Operand

SUITES: tuple[SuiteT, ...] = ("theorems", "conjectures", "kloosterman", "all")


def catalog(settings: VerifySettings | None = None) -> list[IdentityEntry]:
    """Every identity entry, in reporting order."""
    settings = settings or VerifySettings()
    return (
        moments.entries()
        + lvalues.entries()
        + modular.entries()
        + vanhove.entries(include_k3=settings.INCLUDE_WRONSKIAN_K3)
        + kloosterman.entries(zeta71_prime_bound=settings.ZETA71_PRIME_BOUND)
    )


def in_suite(entry: IdentityEntry, suite: SuiteT) -> bool:
    if suite == "all":
        return True
    if suite == "conjectures":
        return entry.kind == "conjecture"
    if entry.kind == "conjecture":
        return False
    if suite == "kloosterman":
        return entry.group == "kloosterman"
    return entry.group != "kloosterman"


def gather_entries(
    suite: SuiteT,
    include: Container[str] = (),
    ignore: Container[str] = (),
    settings: VerifySettings | None = None,
) -> list[IdentityEntry]:
    if suite not in SUITES:
        raise UnknownSuiteError(f"Unknown suite {suite!r}, expected one of {', '.join(SUITES)}.")
    entries = [entry for entry in catalog(settings) if in_suite(entry, suite)]
    if include:
        return [entry for entry in entries if entry.id in include]
    return [entry for entry in entries if entry.id not in ignore]


def get_entry(id: str, settings: VerifySettings | None = None) -> IdentityEntry:
    for entry in catalog(settings):
        if entry.id == id:
            return entry
    raise KeyError(f"No identity entry with id {id!r}.")

"""Persistent store of computed operation values.

Values live in a Django cache alias (a `FileBasedCache` in the bundled settings) as decimal strings
keyed by `v<schema>:<operation>:<params>:d<digits>`. Workers of a parallel run open the cache read-only
and hand their new entries back to the parent process, which writes them.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

from django.core.cache import BaseCache, caches

from ..exceptions import CacheError
from ..mpcore import PrecisionContext
from .operations import Value

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
"""Bumped whenever an algorithm change invalidates stored values."""


class ResultCache:
    def __init__(self, alias: str = "bessel_moments", read_only: bool = False) -> None:
        self.alias = alias
        self.read_only = read_only
        self.pending: dict[str, str] = {}

    @property
    def backend(self) -> BaseCache:
        return caches[self.alias]

    @property
    def location(self) -> Optional[Path]:
        directory = getattr(self.backend, "_dir", None)
        return Path(directory) if directory is not None else None

    def get(self, key: str, ctx: PrecisionContext) -> Optional[Value]:
        try:
            text = self.pending.get(key) or self.backend.get(key)
        except OSError as e:
            raise CacheError(f"Could not read cache entry {key!r}: {e}", self.location) from e
        if text is None:
            return None
        try:
            value: Any = ctx.parse(text)
        except (TypeError, ValueError):
            logger.warning("Ignoring corrupted cache entry %s: %r", key, text)
            return None
        if isinstance(value, Fraction) and value.denominator == 1:
            return int(value)
        return value

    def put(self, key: str, value: Value, ctx: PrecisionContext) -> None:
        text = ctx.render_exact(value)
        if self.read_only:
            self.pending[key] = text
            return
        self._write(key, text)

    def _write(self, key: str, text: str) -> None:
        try:
            self.backend.set(key, text, timeout=None)
        except OSError as e:
            raise CacheError(f"Could not write cache entry {key!r}: {e}", self.location) from e

    def write_pending(self, entries: dict[str, str]) -> None:
        """Write entries collected by a read-only cache."""
        for key, text in entries.items():
            self._write(key, text)

    def clear(self) -> None:
        try:
            self.backend.clear()
        except OSError as e:
            raise CacheError(f"Could not clear the cache: {e}", self.location) from e

    def stats(self) -> dict[str, Any]:
        location = self.location
        if location is None:
            return {"alias": self.alias, "location": None, "entries": None}
        entries = sum(1 for _ in location.glob("*.djcache")) if location.is_dir() else 0
        return {"alias": self.alias, "location": str(location), "entries": entries}

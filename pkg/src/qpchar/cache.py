"""Content-addressed on-disk cache of computed series.

One JSON file per (operation, canonical parameters, order).  The file holds
the full key next to the series, so hash collisions and hand-edited files
are detected on read.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import random
from pathlib import Path
from typing import Callable

from .qseries import TruncatedSeries

__all__ = ["ENV_VAR", "SeriesCache", "resolve_cache_dir"]

ENV_VAR = "QPCHAR_CACHE"

log = logging.getLogger(__name__)


def resolve_cache_dir(cli_value: str | None) -> Path | None:
    """``--cache-dir`` wins over ``$QPCHAR_CACHE``; neither means no cache."""
    value = cli_value or os.environ.get(ENV_VAR)
    return Path(value) if value else None


class SeriesCache:
    def __init__(self, directory: Path | str, oracle: bool = False):
        self.directory = Path(directory)
        self.oracle = oracle
        self.hits = 0
        self.misses = 0
        self.repairs = 0

    @staticmethod
    def key(op: str, params: str, order: int) -> str:
        return f"{op}|{params}|{order}"

    def path_for(self, key: str) -> Path:
        digest = hashlib.sha256(key.encode()).hexdigest()[:24]
        op = key.split("|", 1)[0]
        return self.directory / f"{op}-{digest}.json"

    def _read(self, key: str) -> TruncatedSeries | None:
        path = self.path_for(key)
        try:
            record = json.loads(path.read_text())
        except FileNotFoundError:
            return None
        except (OSError, ValueError) as exc:
            log.warning("unreadable cache entry %s: %s", path, exc)
            return None
        if record.get("key") != key:
            log.warning("cache entry %s belongs to another key", path)
            return None
        try:
            return TruncatedSeries.from_dict(record["series"])
        except (KeyError, ValueError, TypeError) as exc:
            log.warning("malformed cache entry %s: %s", path, exc)
            return None

    def _write(self, key: str, series: TruncatedSeries) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self.path_for(key)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps({"key": key, "series": series.to_dict()}, separators=(",", ":")))
        os.replace(tmp, path)

    def get_or_compute(
        self, op: str, params: str, order: int, compute: Callable[[], TruncatedSeries]
    ) -> TruncatedSeries:
        key = self.key(op, params, order)
        cached = self._read(key)
        if cached is not None and cached.order == order:
            if not self.oracle:
                self.hits += 1
                return cached
            fresh = compute()
            n = random.Random(key).randrange(order + 1)
            if cached[n] == fresh[n]:
                self.hits += 1
                return cached
            log.warning("cache entry for %s disagrees at q^%d; rewriting", key, n)
            self.repairs += 1
            self._write(key, fresh)
            return fresh
        self.misses += 1
        series = compute()
        self._write(key, series)
        return series

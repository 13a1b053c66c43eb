# src/crossnest/cache.py
"""
Count cache: a versioned JSON file mapping canonical query keys to decimal integers, e.g.

    {"version": 1, "entries": {"gkj:k=2,j=3,m=7": "1430"}}
"""
from __future__ import annotations

import logging
import os
import tempfile
from pathlib import Path
from typing import Callable

import orjson

from .errors import CacheFormatError
from .settings import Settings, get_settings

log = logging.getLogger("crossnest.cache")

CACHE_VERSION = 1


def cache_key(kind: str, /, **params: int | str) -> str:
    """``cache_key("gkj", k=2, j=3, m=7)`` -> ``"gkj:k=2,j=3,m=7"`` (parameters in call order)."""
    return f"{kind}:" + ",".join(f"{k}={v}" for k, v in params.items())


def _decode(raw: bytes) -> dict[str, int]:
    try:
        doc = orjson.loads(raw)
    except orjson.JSONDecodeError as e:
        raise CacheFormatError(f"cache is not JSON: {e}") from e
    if not isinstance(doc, dict):
        raise CacheFormatError("cache root is not an object")
    if doc.get("version") != CACHE_VERSION:
        raise CacheFormatError(f"unsupported cache version {doc.get('version')!r}")
    entries = doc.get("entries")
    if not isinstance(entries, dict):
        raise CacheFormatError("cache has no entries object")
    out: dict[str, int] = {}
    for key, value in entries.items():
        if not isinstance(value, str) or not value.lstrip("-").isdigit():
            raise CacheFormatError(f"entry {key!r} is not a decimal integer string")
        out[key] = int(value)
    return out


class CountCache:
    """Load-once, write-through. ``enabled=False`` turns every lookup into a miss, no writes."""

    def __init__(self, path: Path | None = None, enabled: bool = True) -> None:
        self.path = Path(path) if path is not None else get_settings().CACHE_PATH
        self.enabled = enabled
        self._entries: dict[str, int] | None = None

    @classmethod
    def from_settings(cls, cfg: Settings, enabled: bool = True) -> "CountCache":
        return cls(cfg.CACHE_PATH, enabled)

    def _load(self) -> dict[str, int]:
        if self._entries is not None:
            return self._entries
        self._entries = {}
        if self.enabled and self.path.exists():
            try:
                self._entries = _decode(self.path.read_bytes())
            except (CacheFormatError, OSError) as e:
                log.warning("cache.unreadable", extra={"path": str(self.path), "error": str(e)})
        log.debug("cache.loaded", extra={"path": str(self.path), "entries": len(self._entries)})
        return self._entries

    def get(self, key: str) -> int | None:
        if not self.enabled:
            return None
        return self._load().get(key)

    def put(self, key: str, value: int) -> None:
        if not self.enabled:
            return
        entries = self._load()
        if entries.get(key) == value:
            return
        entries[key] = value
        self._write(entries)

    def get_or_compute(self, key: str, compute: Callable[[], int]) -> int:
        hit = self.get(key)
        if hit is not None:
            log.debug("cache.hit", extra={"key": key})
            return hit
        value = compute()
        self.put(key, value)
        return value

    def _write(self, entries: dict[str, int]) -> None:
        doc = {
            "version": CACHE_VERSION,
            "entries": {k: str(v) for k, v in sorted(entries.items())},
        }
        payload = orjson.dumps(doc, option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS)
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=".counts-", suffix=".json")
            try:
                with os.fdopen(fd, "wb") as f:
                    f.write(payload)
                os.replace(tmp, self.path)
            except OSError:
                Path(tmp).unlink(missing_ok=True)
                raise
        except OSError as e:
            log.warning("cache.write_failed", extra={"path": str(self.path), "error": str(e)})

"""On-disk JSON cache for expensive enumerations.

Entries are plain JSON files keyed by Cartan type, payload kind and a key
string.  An entry written under a different ``SCHEMA_VERSION`` is ignored and
recomputed.  Failing to write is never fatal.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from dataclasses import asdict, dataclass
from pathlib import Path

SCHEMA_VERSION = 1
KINDS = ("group-enumeration", "interval", "catalogue")
ENV_VAR = "SCHUBERT_CACHE_DIR"

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CacheEntry:
    schema_version: int
    cartan_type: str
    kind: str
    key: str
    payload: object


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "schubert-spherical"


class DiskCache:
    def __init__(self, directory=None):
        self.directory = Path(directory) if directory is not None else default_cache_dir()

    def _path(self, cartan_type: str, kind: str, key: str) -> Path:
        digest = hashlib.sha256(key.encode()).hexdigest()[:16]
        return self.directory / f"{cartan_type}-{kind}-{digest}.json"

    def load(self, cartan_type: str, kind: str, key: str = ""):
        """Cached payload, or None when absent, unreadable or stale."""
        if kind not in KINDS:
            raise ValueError(f"unknown cache kind {kind!r}")
        path = self._path(cartan_type, kind, key)
        try:
            raw = json.loads(path.read_text())
            entry = CacheEntry(**raw)
        except (OSError, ValueError, TypeError):
            return None
        if entry.schema_version != SCHEMA_VERSION:
            log.info("ignoring %s: schema %s != %s", path, entry.schema_version, SCHEMA_VERSION)
            return None
        if (entry.cartan_type, entry.kind, entry.key) != (cartan_type, kind, key):
            return None
        return entry.payload

    def store(self, cartan_type: str, kind: str, key: str, payload) -> None:
        if kind not in KINDS:
            raise ValueError(f"unknown cache kind {kind!r}")
        entry = CacheEntry(SCHEMA_VERSION, cartan_type, kind, key, payload)
        path = self._path(cartan_type, kind, key)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(".tmp")
            tmp.write_text(json.dumps(asdict(entry), sort_keys=True))
            tmp.replace(path)
        except OSError as exc:
            log.warning("could not write cache entry %s: %s", path, exc)

    def get_or_compute(self, cartan_type: str, kind: str, key: str, compute):
        hit = self.load(cartan_type, kind, key)
        if hit is not None:
            return hit
        payload = compute()
        self.store(cartan_type, kind, key, payload)
        return payload


class NullCache(DiskCache):
    """Cache that never stores anything."""

    def __init__(self):
        super().__init__(Path(os.devnull))

    def load(self, cartan_type, kind, key=""):
        return None

    def store(self, cartan_type, kind, key, payload):
        pass

"""Persistent SLD cache keyed by connected-component graph IDs.

Storage is an append-only log, one JSON record per line, replayed into
a dict at startup; the last record for a key wins.  Appends go through
a single lock and are flushed line-at-a-time, so concurrent readers of
the in-memory map never observe torn records.  A partial trailing line
(crashed writer) is ignored on replay.

Records carry the engine version that produced them: after a version
bump old records are recomputed instead of trusted, and the fresh
result is appended over them.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from pathlib import Path
from threading import Lock

from . import ENGINE_VERSION
from .errors import CacheIntegrityError, CacheIOError, DomainError
from .graph import Graph, encode_graph_id
from .sld import SLD, sld_bruteforce_connected, sld_combine


@dataclass(frozen=True)
class CacheRecord:
    key: str
    sld: SLD
    computed_at_ms: int
    engine_version: str

    def to_json(self) -> dict:
        return {
            "key": self.key,
            "sld": self.sld.to_json(),
            "computedAtMs": self.computed_at_ms,
            "engineVersion": self.engine_version,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "CacheRecord":
        sld_doc = doc["sld"]
        return cls(
            key=doc["key"],
            sld=SLD(sld_doc["n"], tuple(sld_doc["A"])),
            computed_at_ms=doc["computedAtMs"],
            engine_version=doc["engineVersion"],
        )


class SldCache:
    """Map of component graph-ID to SLD, optionally persisted to a log file."""

    def __init__(self, path: str | Path | None = None):
        self._path = Path(path) if path is not None else None
        self._records: dict[str, CacheRecord] = {}
        self._lock = Lock()
        if self._path is not None:
            self._replay()

    def _replay(self) -> None:
        if not self._path.exists():
            return
        try:
            text = self._path.read_text(encoding="utf-8")
        except OSError as exc:
            raise CacheIOError(f"cannot read cache log {self._path}: {exc}; retry later") from exc
        lines = text.split("\n")
        for lineno, line in enumerate(lines):
            if not line.strip():
                continue
            try:
                record = CacheRecord.from_json(json.loads(line))
            except (json.JSONDecodeError, KeyError, TypeError, DomainError) as exc:
                if lineno == len(lines) - 1:
                    # torn final append from a crashed writer; drop it
                    break
                raise CacheIntegrityError(
                    f"corrupt cache record at {self._path}:{lineno + 1}: {exc}"
                ) from exc
            self._records[record.key] = record

    def __len__(self) -> int:
        return len(self._records)

    def get(self, key: str) -> SLD | None:
        """Last stored SLD for the key, or None (also None on version mismatch)."""
        record = self._records.get(key)
        if record is None or record.engine_version != ENGINE_VERSION:
            return None
        return record.sld

    def put(self, key: str, sld: SLD) -> CacheRecord:
        """Store a freshly computed SLD.

        Idempotent for an identical (key, sld) pair; a different SLD for
        a key already stored by the same engine version is an integrity
        error, never a silent overwrite.  Records from other engine
        versions are superseded by appending.
        """
        with self._lock:
            existing = self._records.get(key)
            if existing is not None and existing.engine_version == ENGINE_VERSION:
                if existing.sld == sld:
                    return existing
                raise CacheIntegrityError(
                    f"cache already holds a different SLD for key {key!r}"
                )
            record = CacheRecord(
                key=key,
                sld=sld,
                computed_at_ms=int(time.time() * 1000),
                engine_version=ENGINE_VERSION,
            )
            if self._path is not None:
                line = json.dumps(record.to_json(), separators=(",", ":")) + "\n"
                try:
                    self._path.parent.mkdir(parents=True, exist_ok=True)
                    with open(self._path, "a", encoding="utf-8") as fh:
                        fh.write(line)
                        fh.flush()
                except OSError as exc:
                    raise CacheIOError(
                        f"cannot append to cache log {self._path}: {exc}; retry later"
                    ) from exc
            self._records[key] = record
            return record


def cached_sld_of_graph(g: Graph, cache: SldCache | None, workers: int = 1) -> SLD:
    """Per-component SLD computation through the cache.

    Each unique component key is computed at most once per call and at
    most once per cache lifetime; results are folded with sld_combine.
    """
    memo: dict[str, SLD] = {}
    result = SLD(0, (1,))
    for members, comp in g.components():
        key = encode_graph_id(comp)
        part = memo.get(key)
        if part is None:
            part = cache.get(key) if cache is not None else None
            if part is None:
                part = sld_bruteforce_connected(comp, workers=workers)
                if cache is not None:
                    cache.put(key, part)
            memo[key] = part
        result = sld_combine(result, part)
    return result

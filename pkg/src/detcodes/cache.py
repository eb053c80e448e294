"""Append-only result cache.

Records live in a JSONL file keyed by (operation, q, l, m, t, r, s) plus the
artifact version; records written by a different version are ignored on
load, so no invalidation logic is needed.  All numeric payloads are decimal
strings.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from . import __version__

_KEY_FIELDS = ("q", "l", "m", "t", "r", "s")


class ResultCache:
    def __init__(self, directory: str | os.PathLike):
        self.path = Path(directory) / "detcodes-cache.jsonl"
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._mem: dict[tuple, object] = {}
        if self.path.exists():
            with self.path.open("r", encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    rec = json.loads(line)
                    if rec.get("version") != __version__:
                        continue
                    self._mem[self._key(rec["op"], rec["key"])] = rec["value"]

    @staticmethod
    def _key(op: str, key: dict) -> tuple:
        return (op,) + tuple(key.get(f) for f in _KEY_FIELDS)

    def get(self, op: str, **key):
        return self._mem.get(self._key(op, self._norm(key)))

    def put(self, op: str, value, **key) -> None:
        key = self._norm(key)
        k = self._key(op, key)
        if k in self._mem:
            return
        self._mem[k] = value
        rec = {"version": __version__, "op": op, "key": key, "value": value}
        with self.path.open("a", encoding="utf-8") as fh:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")

    @staticmethod
    def _norm(key: dict) -> dict:
        return {f: key[f] for f in _KEY_FIELDS if key.get(f) is not None}


def cache_from_env() -> ResultCache | None:
    """Cache directory from DETCODE_CACHE; unset disables caching."""
    directory = os.environ.get("DETCODE_CACHE")
    return ResultCache(directory) if directory else None

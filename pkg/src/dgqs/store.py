"""Run manifests and the keyed JSONL report store."""
from __future__ import annotations

import hashlib
import json
import os
import platform
from pathlib import Path
from typing import Any

from dgqs import __version__


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def build_manifest(subcommand: str, params: dict[str, Any], inputs: dict[str, Any] | None = None) -> dict[str, Any]:
    manifest = {
        "tool": "dgqs",
        "version": __version__,
        "python": platform.python_version(),
        "subcommand": subcommand,
        "params": params,
        "inputs": inputs or {},
    }
    manifest["id"] = hashlib.sha256(dumps(manifest).encode()).hexdigest()[:16]
    return manifest


def record_key(graph: str | None, check: str, params: dict[str, Any] | None = None) -> dict[str, Any]:
    return {"graph": graph, "check": check, "params": params or {}}


class ReportStore:
    """JSONL file of ``{key, value, manifest_ref}`` records, unique by key.

    Re-running a check replaces its record in place, so repeated runs over
    the same inputs leave the file byte-identical.
    """

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        self._records: dict[str, dict[str, Any]] = {}
        if self.path.exists():
            with self.path.open(encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if line:
                        rec = json.loads(line)
                        self._records[dumps(rec["key"])] = rec

    def __len__(self) -> int:
        return len(self._records)

    def put(self, key: dict[str, Any], value: Any, manifest_ref: str) -> None:
        self._records[dumps(key)] = {"key": key, "value": value, "manifest_ref": manifest_ref}

    def get(self, key: dict[str, Any]) -> dict[str, Any] | None:
        return self._records.get(dumps(key))

    def records(self) -> list[dict[str, Any]]:
        return list(self._records.values())

    def save(self) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        tmp = self.path.with_suffix(self.path.suffix + ".tmp")
        with tmp.open("w", encoding="utf-8") as fh:
            for k in sorted(self._records):
                fh.write(dumps(self._records[k]) + "\n")
        os.replace(tmp, self.path)

"""File-backed entity store: one JSON document per entity, atomic writes.

Documents are written to a temporary file in the same directory and moved
into place with ``os.replace``, so readers only ever see the previous or the
new consistent state; a crash between write and rename leaves the previous
document intact. Concurrent writers are serialized per store instance and
guarded by an optimistic integer version token embedded in each document.
"""

from __future__ import annotations

import json
import os
import re
import threading
import uuid
from pathlib import Path

from .errors import ConflictError, NotFoundError, ValidationError

_ID_RE = re.compile(r"^[A-Za-z0-9][A-Za-z0-9_.-]*$")


def check_entity_id(entity_id: str) -> str:
    if not isinstance(entity_id, str) or not _ID_RE.match(entity_id):
        raise ValidationError(
            f"invalid entity id {entity_id!r} (letters, digits, '_', '-', '.')",
            field="id",
        )
    return entity_id


def new_entity_id() -> str:
    return uuid.uuid4().hex[:12]


class FileStore:
    def __init__(self, root: str | Path):
        self.root = Path(root)
        self._write_lock = threading.Lock()

    def _collection_dir(self, collection: str) -> Path:
        return self.root / collection

    def _path(self, collection: str, entity_id: str) -> Path:
        return self._collection_dir(collection) / f"{check_entity_id(entity_id)}.json"

    def _write_atomic(self, path: Path, doc: dict) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_name(f"{path.name}.tmp-{uuid.uuid4().hex}")
        data = json.dumps(doc, indent=2, ensure_ascii=False)
        with open(tmp, "w", encoding="utf-8") as fh:
            fh.write(data)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)

    def exists(self, collection: str, entity_id: str) -> bool:
        return self._path(collection, entity_id).exists()

    def load(self, collection: str, entity_id: str) -> dict:
        path = self._path(collection, entity_id)
        if not path.exists():
            raise NotFoundError(f"{collection[:-1] if collection.endswith('s') else collection} {entity_id!r} not found")
        return json.loads(path.read_text(encoding="utf-8"))

    def create(self, collection: str, entity_id: str, doc: dict) -> dict:
        with self._write_lock:
            path = self._path(collection, entity_id)
            if path.exists():
                raise ConflictError(f"{entity_id!r} already exists in {collection}")
            doc = dict(doc, version=1)
            self._write_atomic(path, doc)
            return doc

    def update(
        self, collection: str, entity_id: str, doc: dict, expected_version: int
    ) -> dict:
        with self._write_lock:
            current = self.load(collection, entity_id)
            if current.get("version") != expected_version:
                raise ConflictError(
                    f"stale version token {expected_version} for {entity_id!r} "
                    f"(current {current.get('version')})",
                    field="version",
                )
            doc = dict(doc, version=expected_version + 1)
            self._write_atomic(self._path(collection, entity_id), doc)
            return doc

    def list_ids(self, collection: str) -> list[str]:
        directory = self._collection_dir(collection)
        if not directory.is_dir():
            return []
        return sorted(p.stem for p in directory.glob("*.json"))

    def append(self, collection: str, group_id: str, doc: dict) -> str:
        """Append an immutable record under ``collection/group_id/``."""
        with self._write_lock:
            directory = self._collection_dir(collection) / check_entity_id(group_id)
            directory.mkdir(parents=True, exist_ok=True)
            existing = [int(p.stem) for p in directory.glob("*.json") if p.stem.isdigit()]
            seq = max(existing, default=0) + 1
            record_id = f"{seq:06d}"
            self._write_atomic(directory / f"{record_id}.json", dict(doc, record_id=record_id))
            return record_id

    def list_group(self, collection: str, group_id: str) -> list[dict]:
        directory = self._collection_dir(collection) / check_entity_id(group_id)
        if not directory.is_dir():
            return []
        return [
            json.loads(p.read_text(encoding="utf-8"))
            for p in sorted(directory.glob("*.json"))
        ]

import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Optional, Union

from finring.classify import CLASSIFICATION_VERSION, ClassificationRecord
from finring.storage.json import dumps


logger = logging.getLogger(__name__)


class ClassificationCache(object):
    """Classification records on disk, one JSON file per ring digest.

    A file holds {"hash", "version", "record"}.  Records written by another engine version are
    ignored, as are unreadable files; both count as misses.  Writes go to a temporary file in the
    same directory and are moved into place, so a reader never sees half a record and two
    processes writing the same digest leave one of two identical files.
    """

    def __init__(self, directory: Union[str, Path], version: str = CLASSIFICATION_VERSION):
        self.directory = Path(directory)
        self.version = version
        self.hits = 0
        self.misses = 0

    def path(self, digest: str) -> Path:
        return self.directory / f"{digest}.json"

    def get(self, digest: str) -> Optional[ClassificationRecord]:
        path = self.path(digest)
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
            if raw["hash"] != digest or raw["version"] != self.version:
                logger.debug("ignoring stale cache entry %s", path)
                self.misses += 1
                return None
            record = ClassificationRecord.decode_json(raw["record"])
        except FileNotFoundError:
            self.misses += 1
            return None
        except (OSError, ValueError, KeyError, TypeError) as ex:
            logger.warning("ignoring unreadable cache entry %s: %s", path, ex)
            self.misses += 1
            return None
        self.hits += 1
        return record

    def put(self, record: ClassificationRecord) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        payload = dumps({"hash": record.ring_hash, "version": self.version, "record": record})
        handle, temporary = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(handle, "w", encoding="utf-8") as f:
                f.write(payload)
            os.replace(temporary, self.path(record.ring_hash))
        except OSError:
            logger.warning("could not write cache entry for %s", record.ring_hash, exc_info=True)
            if os.path.exists(temporary):
                os.unlink(temporary)

"""Resumable scan state as a small text file with a trailing SHA-256 line.

Layout::

    wolstenholme-checkpoint 1
    spec {...}
    next 17
    total 40
    hit {...}            (zero or more)
    digest <hex>

The digest covers every byte before the ``digest`` line.
"""

from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import CorruptCheckpoint
from .hits import ScanSpec, SearchHit

MAGIC = "wolstenholme-checkpoint 1"


@dataclass
class Checkpoint:
    spec: ScanSpec
    next_unit: int
    total_units: int
    hits: list[SearchHit] = field(default_factory=list)

    @property
    def done(self) -> bool:
        return self.next_unit >= self.total_units

    def body(self) -> str:
        lines = [
            MAGIC,
            f"spec {self.spec.to_json()}",
            f"next {self.next_unit}",
            f"total {self.total_units}",
        ]
        lines += [f"hit {h.to_json()}" for h in self.hits]
        return "\n".join(lines) + "\n"

    def dumps(self) -> str:
        body = self.body()
        return body + f"digest {hashlib.sha256(body.encode()).hexdigest()}\n"

    def save(self, path: str | os.PathLike) -> None:
        """Write atomically: a temporary sibling file is renamed over ``path``."""
        path = Path(path)
        tmp = path.with_name(path.name + ".tmp")
        with open(tmp, "w", encoding="utf-8") as fh:
            fh.write(self.dumps())
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)

    @classmethod
    def loads(cls, text: str) -> "Checkpoint":
        body, sep, tail = text.rpartition("digest ")
        if not sep or not body.endswith("\n"):
            raise CorruptCheckpoint("missing digest line")
        if hashlib.sha256(body.encode()).hexdigest() != tail.strip():
            raise CorruptCheckpoint("digest mismatch")
        lines = body.splitlines()
        try:
            if lines[0] != MAGIC:
                raise ValueError("bad header")
            fields = dict(line.split(" ", 1) for line in lines[1:4])
            spec = ScanSpec.from_json(fields["spec"])
            hits = []
            for line in lines[4:]:
                key, value = line.split(" ", 1)
                if key != "hit":
                    raise ValueError(f"unexpected field {key!r}")
                hits.append(SearchHit.from_json(value))
            return cls(spec, int(fields["next"]), int(fields["total"]), hits)
        except (ValueError, KeyError, IndexError, TypeError) as exc:
            raise CorruptCheckpoint(f"unreadable checkpoint: {exc}") from exc

    @classmethod
    def load(cls, path: str | os.PathLike) -> "Checkpoint":
        try:
            text = Path(path).read_text(encoding="utf-8")
        except UnicodeDecodeError as exc:
            raise CorruptCheckpoint("not a text file") from exc
        return cls.loads(text)

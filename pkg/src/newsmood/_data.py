"""Access to the bundled data files, with checksum verification."""

from __future__ import annotations

import hashlib
import json
from functools import lru_cache
from importlib import resources
from pathlib import Path


class DataIntegrityError(RuntimeError):
    """A bundled data file does not match its recorded checksum."""


def data_dir() -> Path:
    return Path(resources.files("newsmood") / "data")


@lru_cache(maxsize=1)
def _checksums() -> dict[str, str]:
    return json.loads((data_dir() / "checksums.json").read_text(encoding="utf-8"))


def read_data_file(name: str) -> str:
    """Read a bundled data file, verifying its sha256 against checksums.json."""
    path = data_dir() / name
    raw = path.read_bytes()
    expected = _checksums().get(name)
    if expected is not None:
        actual = hashlib.sha256(raw).hexdigest()
        if actual != expected:
            raise DataIntegrityError(
                f"checksum mismatch for bundled file {name!r}: "
                f"expected {expected[:12]}..., got {actual[:12]}...")
    return raw.decode("utf-8")


def parse_table(text: str, columns: int) -> list[tuple[str, ...]]:
    """Parse a tab-separated data file; '#'-prefixed lines and blanks are skipped."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != columns:
            raise DataIntegrityError(
                f"line {lineno}: expected {columns} tab-separated fields, "
                f"got {len(parts)}")
        rows.append(tuple(parts))
    return rows

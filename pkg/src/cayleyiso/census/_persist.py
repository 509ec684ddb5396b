#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/census/_persist.py
"""Checkpoint files for subset censuses, one per (group, size).

Format::

    # schema=1.0 group=Z2^4 size=3
    rep=1.0.0.0,0.1.0.0,0.0.1.0 orbit_size=560 canon=01002000...

A file is reused when its schema major version matches ``CENSUS_SCHEMA``.
"""

from __future__ import annotations

import logging
import re
from pathlib import Path

from packaging.version import InvalidVersion, Version

from .._errors import MalformedInputError

logger = logging.getLogger(__name__)

CENSUS_SCHEMA = "1.0"
_HEADER_RE = re.compile(r"^# schema=(\S+) group=(\S+) size=(\d+)\s*$")
_ROW_RE = re.compile(r"^rep=(\S*) orbit_size=(\d+) canon=([0-9a-f]+)\s*$")


def schema_compatible(found: str, expected: str = CENSUS_SCHEMA) -> bool:
    try:
        return Version(found).major == Version(expected).major
    except InvalidVersion:
        return False


def census_path(directory: str | Path, group: str, size: int) -> Path:
    safe = re.sub(r"[^A-Za-z0-9_.-]", "_", group)
    return Path(directory) / f"{safe}_k{size}.census"


def write_census(path: str | Path, group: str, size: int, rows) -> Path:
    """Write ``rows`` of ``(labels, orbit_size, canon_hex)``."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [f"# schema={CENSUS_SCHEMA} group={group} size={size}"]
    for labels, orbit_size, canon in rows:
        lines.append(f"rep={','.join(labels)} orbit_size={orbit_size} canon={canon}")
    tmp = path.with_suffix(".tmp")
    tmp.write_text("\n".join(lines) + "\n")
    tmp.replace(path)
    logger.debug("Wrote %d census rows to %s", len(rows), path)
    return path


def read_census(path: str | Path, group: str, size: int) -> list[tuple] | None:
    """Rows of a checkpoint file, or None when the file is missing or was
    written under an incompatible schema.

    Raises
    ------
    MalformedInputError
        If the header names another group or size, or a row is garbled.
    """
    path = Path(path)
    if not path.exists():
        return None
    lines = path.read_text().splitlines()
    header = _HEADER_RE.match(lines[0]) if lines else None
    if header is None:
        raise MalformedInputError(f"{path}: missing census header")
    if not schema_compatible(header.group(1)):
        logger.warning("%s: schema %s is incompatible, recomputing", path, header.group(1))
        return None
    if header.group(2) != group or int(header.group(3)) != size:
        raise MalformedInputError(f"{path}: header is for {header.group(2)} size {header.group(3)}")
    rows = []
    for line in lines[1:]:
        if not line.strip():
            continue
        m = _ROW_RE.match(line)
        if m is None:
            raise MalformedInputError(f"{path}: bad census row {line!r}")
        labels = [t for t in m.group(1).split(",") if t]
        rows.append((labels, int(m.group(2)), m.group(3)))
    return rows


__all__ = [
    "CENSUS_SCHEMA",
    "schema_compatible",
    "census_path",
    "write_census",
    "read_census",
]

# EOF

#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/_report.py
"""JSON and TSV renderings of report dicts.

Both renderings are deterministic: keys are sorted and TSV rows follow
the flattened key order, so rerunning a command reproduces its files
byte for byte.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path

logger = logging.getLogger(__name__)


def _default(obj):
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if isinstance(obj, Path):
        return str(obj)
    if hasattr(obj, "to_json"):
        return obj.to_json()
    raise TypeError(f"{type(obj).__name__} is not JSON serializable")


def to_json_text(report) -> str:
    return json.dumps(report, indent=2, sort_keys=True, default=_default) + "\n"


def flatten(report, prefix: str = "") -> list[tuple[str, str]]:
    """``(dotted.key, value)`` pairs; list items get their index as key."""
    rows: list[tuple[str, str]] = []
    if isinstance(report, dict):
        for key in sorted(report, key=str):
            rows += flatten(report[key], f"{prefix}.{key}" if prefix else str(key))
    elif isinstance(report, (list, tuple)):
        if not report:
            rows.append((prefix, "[]"))
        for i, item in enumerate(report):
            rows += flatten(item, f"{prefix}.{i}" if prefix else str(i))
    elif isinstance(report, bool):
        rows.append((prefix, "true" if report else "false"))
    elif report is None:
        rows.append((prefix, ""))
    else:
        rows.append((prefix, str(report)))
    return rows


def to_tsv_text(report) -> str:
    report = json.loads(to_json_text(report))
    return "".join(f"{key}\t{value}\n" for key, value in flatten(report))


def write_report(report, json_path=None, tsv_path=None) -> str | None:
    """Write the report to the given paths.

    ``json_path == "-"`` returns the JSON text instead of writing it, for
    the caller to print.
    """
    text = None
    if json_path is not None:
        rendered = to_json_text(report)
        if str(json_path) == "-":
            text = rendered
        else:
            Path(json_path).write_text(rendered)
            logger.info("Wrote %s", json_path)
    if tsv_path is not None:
        Path(tsv_path).write_text(to_tsv_text(report))
        logger.info("Wrote %s", tsv_path)
    return text


def error_report(exc: BaseException) -> dict:
    return {"error": type(exc).__name__, "message": str(exc)}


__all__ = ["to_json_text", "to_tsv_text", "flatten", "write_report", "error_report"]

# EOF

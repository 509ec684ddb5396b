#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/census/_registry.py
"""Registry of explicit connection sets with known isomorphism behaviour.

Each case names a group, either a bi-Cayley connection set or a full
m-Cayley symbol, and a mapping ``check -> expected``. Running a case
recomputes every check and compares.
"""

from __future__ import annotations

import json
import logging
import time
from dataclasses import dataclass, field
from pathlib import Path

from .._config import RunConfig, resolve
from .._errors import MalformedInputError
from ..ci import (
    is_vertex_transitive,
    k2pci_graph_test,
    kmci_test,
    kmpci_test,
    normalizer_in_aut,
    semiregular_search,
    two_pci_graph_test,
    validate_witness,
)
from ..groups import FiniteGroup, named_group
from ..iso import ColoredDigraph, automorphisms
from ..mcayley import ConnectionSymbol, MCayleyDigraph, build_bcay, build_mcayley
from ._persist import schema_compatible

logger = logging.getLogger(__name__)

REGISTRY_FILE = Path(__file__).parent / "data" / "registry.json"
KINDS = ("counterexample", "witness")


# ----------------------------------------------------------------------
# Cases
# ----------------------------------------------------------------------


@dataclass
class RegistryCase:
    """One registry entry.

    Exactly one of ``set_text`` (a bi-Cayley connection set) and
    ``symbol`` (an m-Cayley symbol in JSON form) is given.
    """

    id: str
    kind: str
    group: str
    checks: dict
    claim: str
    set_text: str | None = None
    symbol: dict | None = None
    note: str | None = None
    slow: bool = False
    _built: tuple | None = field(default=None, repr=False, compare=False)

    @classmethod
    def from_json(cls, data: dict) -> RegistryCase:
        try:
            case = cls(
                id=data["id"],
                kind=data["kind"],
                group=data["group"],
                checks=dict(data["checks"]),
                claim=data["claim"],
                set_text=data.get("set"),
                symbol=data.get("symbol"),
                note=data.get("note"),
                slow=bool(data.get("slow", False)),
            )
        except KeyError as exc:
            raise MalformedInputError(f"registry case missing field {exc}") from None
        if case.kind not in KINDS:
            raise MalformedInputError(f"{case.id}: unknown kind {case.kind!r}")
        if (case.set_text is None) == (case.symbol is None):
            raise MalformedInputError(f"{case.id}: give exactly one of 'set' and 'symbol'")
        unknown = set(case.checks) - set(CHECKS)
        if unknown:
            raise MalformedInputError(f"{case.id}: unknown checks {sorted(unknown)}")
        return case

    def build(self) -> tuple[FiniteGroup, frozenset | None, MCayleyDigraph]:
        """``(group, connection set or None, digraph)``; elements are
        resolved against the group, so a bad label raises here."""
        if self._built is None:
            g = named_group(self.group)
            if self.set_text is not None:
                s = g.parse_set(self.set_text)
                self._built = (g, s, build_bcay(g, s))
            else:
                sym = symbol_from_json(g, self.symbol)
                self._built = (g, None, build_mcayley(g, sym))
        return self._built


def symbol_from_json(g: FiniteGroup, data: dict) -> ConnectionSymbol:
    """Inverse of :meth:`ConnectionSymbol.to_json` (parts are 1-based)."""
    m = int(data["m"])
    mapping = {}
    for entry in data.get("sets", []):
        key = (int(entry["i"]) - 1, int(entry["j"]) - 1)
        mapping[key] = [g.parse_element(str(x)) for x in entry["elements"]]
    return ConnectionSymbol.from_mapping(m, mapping)


# ----------------------------------------------------------------------
# Checks
# ----------------------------------------------------------------------


def _needs_set(case: RegistryCase, s) -> frozenset:
    if s is None:
        raise MalformedInputError(f"{case.id}: this check needs a bi-Cayley connection set")
    return s


def _check_non_conjugate(case, g, s, d, cfg):
    report = semiregular_search(d, True, cfg)
    if report.class_count > 1:
        validate_witness(d, report, report.classes[1], cfg)
    return report.class_count > 1


def _check_right_regular_normal(case, g, s, d, cfg):
    aut = automorphisms(ColoredDigraph.from_adjacency(d.adjacency), "fixed", cfg)
    return normalizer_in_aut(d, cfg).order() == aut.order()


def _check_automorphism_order(case, g, s, d, cfg):
    return automorphisms(ColoredDigraph.from_adjacency(d.adjacency), "fixed", cfg).order()


CHECKS = {
    "non_conjugate_semiregular": _check_non_conjugate,
    "right_regular_normal": _check_right_regular_normal,
    "two_pci": lambda case, g, s, d, cfg: two_pci_graph_test(g, _needs_set(case, s), cfg).result,
    "k2pci": lambda case, g, s, d, cfg: k2pci_graph_test(g, _needs_set(case, s), cfg).result,
    "vertex_transitive": lambda case, g, s, d, cfg: is_vertex_transitive(d, cfg),
    "kmci": lambda case, g, s, d, cfg: kmci_test(d, cfg).result,
    "kmpci": lambda case, g, s, d, cfg: kmpci_test(d, cfg).result,
    "automorphism_order": _check_automorphism_order,
}


# ----------------------------------------------------------------------
# Loading and running
# ----------------------------------------------------------------------


def load_registry(path: str | Path = REGISTRY_FILE) -> list[RegistryCase]:
    """Parse the registry file.

    Raises
    ------
    MalformedInputError
        On an unsupported schema, a malformed case or a duplicate id.
    """
    data = json.loads(Path(path).read_text())
    version = data.get("schema_version", "0")
    if not schema_compatible(version):
        raise MalformedInputError(f"{path}: unsupported schema {version}")
    cases = [RegistryCase.from_json(c) for c in data["cases"]]
    ids = [c.id for c in cases]
    if len(set(ids)) != len(ids):
        raise MalformedInputError(f"{path}: duplicate case ids")
    return cases


def registry_case(case_id: str, path: str | Path = REGISTRY_FILE) -> RegistryCase:
    for case in load_registry(path):
        if case.id == case_id:
            return case
    raise MalformedInputError(f"no registry case {case_id!r}")


def verify_registry_case(
    case: str | RegistryCase, config: RunConfig | None = None
) -> dict:
    """Run every check of ``case`` and compare with its expectation.

    Returns
    -------
    dict
        ``{"id", "group", "claim", "checks": [{"check", "expected",
        "observed", "pass"}], "pass"}``.
    """
    cfg = resolve(config)
    if isinstance(case, str):
        case = registry_case(case)
    g, s, d = case.build()
    start = time.perf_counter()
    rows = []
    for name, expected in case.checks.items():
        observed = CHECKS[name](case, g, s, d, cfg)
        rows.append(
            {"check": name, "expected": expected, "observed": observed, "pass": observed == expected}
        )
        logger.info("%s %s: expected %s, observed %s", case.id, name, expected, observed)
    report = {
        "id": case.id,
        "kind": case.kind,
        "group": case.group,
        "claim": case.claim,
        "checks": rows,
        "pass": all(r["pass"] for r in rows),
    }
    logger.info("%s finished in %.2fs", case.id, time.perf_counter() - start)
    if case.note:
        report["note"] = case.note
    return report


def verify_all(
    config: RunConfig | None = None, include_slow: bool = True, kind: str | None = None
) -> dict:
    """Run the whole registry; ``include_slow=False`` skips the large
    counterexamples."""
    reports, skipped = [], []
    for case in load_registry():
        if kind is not None and case.kind != kind:
            continue
        if case.slow and not include_slow:
            skipped.append(case.id)
            continue
        reports.append(verify_registry_case(case, config))
    failed = [r["id"] for r in reports if not r["pass"]]
    return {"cases": reports, "skipped": skipped, "failed": failed, "pass": not failed}


def kmci_witnesses() -> list[RegistryCase]:
    """The small m-Cayley symbols that settle which groups are KmCI or
    KmPCI for ``m >= 2``."""
    return [c for c in load_registry() if c.kind == "witness"]


__all__ = [
    "REGISTRY_FILE",
    "CHECKS",
    "RegistryCase",
    "symbol_from_json",
    "load_registry",
    "registry_case",
    "verify_registry_case",
    "verify_all",
    "kmci_witnesses",
]

# EOF

#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/ci/_verdict.py
"""Verdict records shared by every decision procedure."""

from __future__ import annotations

from dataclasses import dataclass, field

PROPERTIES = ("kmci", "kmpci", "2pci", "k2pci", "bci3", "vtx")


@dataclass
class CiVerdict:
    """Outcome of one isomorphism-property test.

    Parameters
    ----------
    property : str
        One of ``PROPERTIES`` or a group-level variant (``k2pci-group``).
    group : str
        Group spec.
    set : list of str or dict, optional
        Connection-set labels, or the JSON symbol of an m-Cayley digraph.
    result : bool
    certificate : dict, optional
        Checkable witness. Always present when ``result`` is False.
    budget_used : dict
        Search counters (nodes, subsets, canonical forms).
    route : str
        Which decision route produced the verdict.
    """

    property: str
    group: str
    set: list | dict | None
    result: bool
    certificate: dict | None = None
    budget_used: dict = field(default_factory=dict)
    route: str = "criterion"

    def __bool__(self) -> bool:
        return self.result

    def to_json(self) -> dict:
        return {
            "property": self.property,
            "group": self.group,
            "set": self.set,
            "result": self.result,
            "certificate": self.certificate,
            "budget_used": dict(self.budget_used),
            "route": self.route,
        }


__all__ = ["CiVerdict", "PROPERTIES"]

# EOF

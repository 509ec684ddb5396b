#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/_mcp/handlers.py
"""Async MCP handlers wrapping the cayleyiso Python API."""

from __future__ import annotations

from .._errors import CayleyIsoError

# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------


def _failure(exc: Exception) -> dict:
    return {"success": False, "error": str(exc), "error_type": type(exc).__name__}


def _target(group: str, connection_set: str = "", symbol_text: str = ""):
    from ..groups import named_group
    from ..mcayley import build_bcay, build_mcayley, symbol_from_text

    if symbol_text:
        g, sym = symbol_from_text(symbol_text, named_group(group) if group else None)
        return g, None, build_mcayley(g, sym)
    g = named_group(group)
    s = g.parse_set(connection_set)
    return g, s, build_bcay(g, s)


# ---------------------------------------------------------------------------
# Group handlers
# ---------------------------------------------------------------------------


async def group_info_handler(group: str) -> dict:
    """Order, type, automorphism count and solvability."""
    from ..groups import automorphism_count, describe_group, is_solvable, named_group

    try:
        g = named_group(group)
        return {
            "success": True,
            "group": g.name,
            "order": g.order,
            "type": describe_group(g),
            "abelian": g.is_abelian(),
            "solvable": is_solvable(g),
            "automorphism_order": automorphism_count(g),
            "elements": list(g.labels),
        }
    except CayleyIsoError as exc:
        return _failure(exc)


async def group_screen_handler(group: str) -> dict:
    """Necessary 2PCI conditions and, where feasible, the census."""
    from ..census import group_2pci_screen
    from ..groups import named_group

    try:
        return {"success": True, **group_2pci_screen(named_group(group))}
    except CayleyIsoError as exc:
        return _failure(exc)


# ---------------------------------------------------------------------------
# Graph handlers
# ---------------------------------------------------------------------------


async def graph_automorphisms_handler(
    group: str, connection_set: str = "", symbol_text: str = ""
) -> dict:
    """Automorphism orders of BCay(G, S) or of an m-Cayley symbol."""
    from ..ci import normalizer_in_aut
    from ..iso import ColoredDigraph, automorphisms

    try:
        g, _, d = _target(group, connection_set, symbol_text)
        full = automorphisms(ColoredDigraph.from_adjacency(d.adjacency))
        fixed = automorphisms(ColoredDigraph.from_mcayley(d))
        normalizer = normalizer_in_aut(d)
        return {
            "success": True,
            "group": g.name,
            "vertices": d.n_vertices,
            "automorphism_order": full.order(),
            "part_fixing_order": fixed.order(),
            "normalizer_order": normalizer.order(),
            "vertex_transitive": full.is_transitive(),
        }
    except CayleyIsoError as exc:
        return _failure(exc)


async def ci_test_handler(
    property: str,  # noqa: A002
    group: str,
    connection_set: str = "",
    symbol_text: str = "",
    route: str = "auto",
) -> dict:
    """Run one decision procedure and return its verdict."""
    from ..ci import (
        bci3_verdict,
        is_vertex_transitive,
        k2pci_graph_test,
        kmci_test,
        kmpci_test,
        two_pci_graph_test,
    )

    try:
        g, s, d = _target(group, connection_set, symbol_text)
        if property == "vtx":
            return {"success": True, "property": "vtx", "result": is_vertex_transitive(d)}
        if property == "kmci":
            verdict = kmci_test(d)
        elif property == "kmpci":
            verdict = kmpci_test(d)
        elif s is None:
            return {"success": False, "error": f"{property} needs a connection set"}
        elif property == "2pci":
            verdict = two_pci_graph_test(g, s, route=route)
        elif property == "k2pci":
            verdict = k2pci_graph_test(g, s, route=route)
        elif property == "bci3":
            verdict = bci3_verdict(g, s)
        else:
            return {"success": False, "error": f"unknown property {property!r}"}
        return {"success": True, **verdict.to_json()}
    except CayleyIsoError as exc:
        return _failure(exc)


# ---------------------------------------------------------------------------
# Census handlers
# ---------------------------------------------------------------------------


async def census_table1_handler(max_order: int = 18) -> dict:
    """Recompute the K2PCI column of the exceptional-group table."""
    from ..census import table1_report

    try:
        return {"success": True, **table1_report(max_order)}
    except CayleyIsoError as exc:
        return _failure(exc)


async def census_registry_handler(case_id: str = "all", include_slow: bool = False) -> dict:
    """Verify one registry case or the whole registry."""
    from ..census import verify_all, verify_registry_case

    try:
        if case_id == "all":
            return {"success": True, **verify_all(include_slow=include_slow)}
        return {"success": True, **verify_registry_case(case_id)}
    except CayleyIsoError as exc:
        return _failure(exc)


# EOF

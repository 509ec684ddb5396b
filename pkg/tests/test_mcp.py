#!/usr/bin/env python3
"""Tests for the MCP handlers and, when fastmcp is installed, the server."""

import asyncio

import pytest

from cayleyiso._mcp import (
    census_registry_handler,
    census_table1_handler,
    ci_test_handler,
    graph_automorphisms_handler,
    group_info_handler,
    group_screen_handler,
)

# ---------------------------------------------------------------------------
# Handlers
# ---------------------------------------------------------------------------


def test_group_info_handler():
    result = asyncio.run(group_info_handler("Q8"))
    assert result["success"]
    assert result["order"] == 8
    assert result["automorphism_order"] == 24


def test_group_info_handler_reports_errors():
    result = asyncio.run(group_info_handler("Q7"))
    assert not result["success"]
    assert result["error_type"] == "GroupSpecError"


def test_group_screen_handler():
    result = asyncio.run(group_screen_handler("Z8"))
    assert result["success"]
    assert "sylow_condition" in result["eliminated_by"]


def test_graph_automorphisms_handler():
    result = asyncio.run(graph_automorphisms_handler("Z3", connection_set="0,1"))
    assert result["success"]
    assert result["automorphism_order"] == 12
    assert result["vertex_transitive"]


def test_ci_test_handler_on_a_set():
    result = asyncio.run(ci_test_handler("2pci", "Z8", connection_set="0,1,2,5"))
    assert result["success"]
    assert result["result"] is False
    assert result["certificate"]["kind"] == "isomorphic_set_outside_family"


def test_ci_test_handler_on_a_symbol():
    text = "mcay m=2 n=1 group=1\nS 1 2 : 1\n"
    result = asyncio.run(ci_test_handler("kmci", "", symbol_text=text))
    assert result["success"]
    assert result["result"] is False


@pytest.mark.parametrize(
    "prop, kwargs",
    [
        ("girth", {"connection_set": "0,1"}),
        ("2pci", {"symbol_text": "mcay m=2 n=3 group=Z3\nS 1 2 : 0\n"}),
        ("k2pci", {"connection_set": "0,9"}),
    ],
)
def test_ci_test_handler_failures(prop, kwargs):
    result = asyncio.run(ci_test_handler(prop, "Z3", **kwargs))
    assert not result["success"]
    assert result["error"]


def test_census_table1_handler():
    result = asyncio.run(census_table1_handler(max_order=4))
    assert result["success"]
    assert result["all_match"]


def test_census_registry_handler():
    result = asyncio.run(census_registry_handler("trivial-m2-edge"))
    assert result["success"]
    assert result["pass"]
    missing = asyncio.run(census_registry_handler("nothing"))
    assert not missing["success"]


# ---------------------------------------------------------------------------
# Server
# ---------------------------------------------------------------------------


def test_server_registers_tools():
    server = pytest.importorskip("cayleyiso.mcp_server")
    if not server.FASTMCP_AVAILABLE:
        pytest.skip("fastmcp not installed")
    from cayleyiso._cli._mcp import EXPECTED_TOOLS, _tools_map

    tools = _tools_map(server.mcp)
    if tools:
        assert len(tools) == EXPECTED_TOOLS


# EOF

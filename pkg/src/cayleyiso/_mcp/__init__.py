#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/_mcp/__init__.py
"""MCP handlers for cayleyiso."""

from .handlers import (
    census_registry_handler,
    census_table1_handler,
    ci_test_handler,
    graph_automorphisms_handler,
    group_info_handler,
    group_screen_handler,
)

__all__ = [
    "census_registry_handler",
    "census_table1_handler",
    "ci_test_handler",
    "graph_automorphisms_handler",
    "group_info_handler",
    "group_screen_handler",
]

# EOF

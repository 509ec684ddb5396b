#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/mcp_server.py
"""FastMCP server for cayleyiso.

Usage:
    cayleyiso-mcp                  # stdio
    cayleyiso mcp start            # alternative entry point
"""

from __future__ import annotations

try:
    from fastmcp import FastMCP

    FASTMCP_AVAILABLE = True
except ImportError:
    FASTMCP_AVAILABLE = False
    FastMCP = None  # type: ignore

__all__ = ["mcp", "main", "FASTMCP_AVAILABLE"]

if FASTMCP_AVAILABLE:
    mcp = FastMCP(
        name="cayleyiso",
        instructions="""\
cayleyiso: isomorphism properties of m-Cayley and bi-Cayley digraphs.

Groups are given as specs (Z4, Z2^4, D8, Dic12, Q8xZ2, A5, F8, G18).
Connection sets are comma-separated element labels; symbols use the
digraph text format ("mcay m=2 n=4 group=Z4" then "S i j : labels").

## Available Tools

### Groups
- group_info         : Order, type, Aut(G) order, solvability
- group_screen       : Necessary 2PCI conditions plus census when feasible

### Digraphs
- graph_automorphisms: Aut orders of BCay(G, S) or an m-Cayley symbol

### Decisions
- ci_test            : kmci | kmpci | 2pci | k2pci | bci3 | vtx

### Census
- census_table1      : Recompute the exceptional-group K2PCI column
- census_registry    : Verify registry cases of known counterexamples
""",
    )
else:
    mcp = None


# ---------------------------------------------------------------------------
# Tool registrations
# ---------------------------------------------------------------------------

if FASTMCP_AVAILABLE and mcp is not None:

    @mcp.tool()
    async def group_info(group: str) -> dict:
        """Describe a finite group.

        Args:
            group: Group spec, e.g. "Z4xZ2" or "Dic12".
        """
        from ._mcp.handlers import group_info_handler

        return await group_info_handler(group=group)

    @mcp.tool()
    async def group_screen(group: str) -> dict:
        """Screen a group for 2PCI with the necessary conditions.

        Args:
            group: Group spec.
        """
        from ._mcp.handlers import group_screen_handler

        return await group_screen_handler(group=group)

    @mcp.tool()
    async def graph_automorphisms(
        group: str,
        connection_set: str = "",
        symbol_text: str = "",
    ) -> dict:
        """Automorphism group orders of a bi-Cayley or m-Cayley digraph.

        Args:
            group: Group spec.
            connection_set: Labels of S for BCay(G, S).
            symbol_text: Full symbol in the digraph text format (overrides S).
        """
        from ._mcp.handlers import graph_automorphisms_handler

        return await graph_automorphisms_handler(
            group=group, connection_set=connection_set, symbol_text=symbol_text
        )

    @mcp.tool()
    async def ci_test(
        property: str,  # noqa: A002
        group: str,
        connection_set: str = "",
        symbol_text: str = "",
        route: str = "auto",
    ) -> dict:
        """Decide an isomorphism property of one digraph.

        Args:
            property: One of kmci, kmpci, 2pci, k2pci, bci3, vtx.
            group: Group spec.
            connection_set: Labels of S for BCay(G, S).
            symbol_text: Full symbol in the digraph text format.
            route: auto, exhaustive or criterion (2pci/k2pci only).
        """
        from ._mcp.handlers import ci_test_handler

        return await ci_test_handler(
            property=property,
            group=group,
            connection_set=connection_set,
            symbol_text=symbol_text,
            route=route,
        )

    @mcp.tool()
    async def census_table1(max_order: int = 18) -> dict:
        """Recompute the K2PCI column for exceptional groups up to max_order.

        Args:
            max_order: Largest group order to recompute.
        """
        from ._mcp.handlers import census_table1_handler

        return await census_table1_handler(max_order=max_order)

    @mcp.tool()
    async def census_registry(case_id: str = "all", include_slow: bool = False) -> dict:
        """Verify a registry case ("all" for every case).

        Args:
            case_id: Registry case id, e.g. "Z8-not-2PCI", or "all".
            include_slow: With "all", also run the large counterexamples.
        """
        from ._mcp.handlers import census_registry_handler

        return await census_registry_handler(case_id=case_id, include_slow=include_slow)


# ---------------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------------


def main() -> None:
    """Entry point for cayleyiso-mcp command (stdio transport)."""
    if not FASTMCP_AVAILABLE:
        import sys

        print("=" * 60)
        print("fastmcp is required: pip install 'cayleyiso[mcp]'")
        print("=" * 60)
        sys.exit(1)

    mcp.run(transport="stdio")


if __name__ == "__main__":
    main()

# EOF

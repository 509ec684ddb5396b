#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/_cli/_mcp.py
"""MCP CLI sub-group for cayleyiso.

Commands:
- cayleyiso mcp list-tools   Registered tools, grouped by layer
- cayleyiso mcp doctor       Check the optional stack and run a smoke call
- cayleyiso mcp start        Start the MCP server
"""

from __future__ import annotations

import asyncio

import click

TOOL_GROUPS = {
    "groups": ("group_info", "group_screen"),
    "digraphs": ("graph_automorphisms",),
    "decisions": ("ci_test",),
    "census": ("census_table1", "census_registry"),
}
EXPECTED_TOOLS = sum(len(names) for names in TOOL_GROUPS.values())
INSTALL_HINT = "pip install 'cayleyiso[mcp]'"


@click.group(invoke_without_command=True)
@click.pass_context
def mcp(ctx):
    """MCP (Model Context Protocol) server for the decision procedures."""
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


def _load_server():
    from cayleyiso.mcp_server import FASTMCP_AVAILABLE
    from cayleyiso.mcp_server import mcp as mcp_server

    if not FASTMCP_AVAILABLE or mcp_server is None:
        click.secho(f"ERROR: fastmcp is not installed ({INSTALL_HINT})", fg="red", err=True)
        raise SystemExit(1)
    return mcp_server


def _tools_map(mcp_server) -> dict:
    try:
        return mcp_server._tool_manager._tools
    except AttributeError:
        return getattr(mcp_server, "_tools", {})


def _parameters(tool_obj) -> str:
    schema = getattr(tool_obj, "parameters", None) or {}
    required = set(schema.get("required", []))
    parts = []
    for name, info in schema.get("properties", {}).items():
        kind = info.get("type", "any")
        parts.append(f"{name}: {kind}" if name in required else f"[{name}: {kind}]")
    return ", ".join(parts)


@mcp.command("list-tools")
@click.option("-v", "--verbose", count=True, help="-v parameters, -vv first docstring line")
def list_tools(verbose: int):
    """List registered MCP tools by layer."""
    tools_map = _tools_map(_load_server())
    click.secho(f"cayleyiso MCP: {len(tools_map)} tools", fg="cyan", bold=True)
    seen = set()
    for layer, names in TOOL_GROUPS.items():
        click.secho(f"{layer}:", bold=True)
        for name in names:
            tool_obj = tools_map.get(name)
            if tool_obj is None:
                click.secho(f"  {name} (not registered)", fg="yellow")
                continue
            seen.add(name)
            line = f"  {click.style(name, fg='green')}"
            if verbose:
                line += f"({_parameters(tool_obj)})"
            click.echo(line)
            desc = getattr(tool_obj, "description", None)
            if verbose >= 2 and isinstance(desc, str) and desc.strip():
                click.echo(f"      {desc.strip().splitlines()[0]}")
    for name in sorted(set(tools_map) - seen):
        click.echo(f"  {name} (unlisted)")


def _smoke_call() -> str | None:
    from cayleyiso._mcp.handlers import group_info_handler

    result = asyncio.run(group_info_handler("Z4xZ2"))
    if not result.get("success"):
        return result.get("error", "handler failed")
    if result.get("automorphism_order") != 8:
        return f"Aut(Z4xZ2) reported as {result.get('automorphism_order')}, expected 8"
    return None


@mcp.command("doctor")
@click.option("--verbose", "-v", is_flag=True, help="Show versions.")
def doctor(verbose: bool):
    """Check fastmcp, the numeric stack, a handler call and tool registration."""
    issues = []
    click.secho("cayleyiso MCP doctor", fg="cyan", bold=True)

    for module_name in ("fastmcp", "numpy", "networkx"):
        click.echo(f"  {module_name:<10}", nl=False)
        try:
            module = __import__(module_name)
        except ImportError:
            click.secho("missing", fg="red")
            issues.append(f"{module_name} not importable" + (f" ({INSTALL_HINT})" if module_name == "fastmcp" else ""))
            continue
        version = getattr(module, "__version__", "?")
        click.secho(f"ok {version}" if verbose else "ok", fg="green")

    click.echo(f"  {'handler':<10}", nl=False)
    problem = _smoke_call()
    if problem:
        click.secho("FAIL", fg="red")
        issues.append(problem)
    else:
        click.secho("ok (group_info Z4xZ2)", fg="green")

    click.echo(f"  {'tools':<10}", nl=False)
    from cayleyiso.mcp_server import mcp as mcp_server

    if mcp_server is None:
        click.secho("skip", fg="yellow")
    else:
        registered = set(_tools_map(mcp_server))
        missing = [n for names in TOOL_GROUPS.values() for n in names if n not in registered]
        if missing:
            click.secho(f"missing {', '.join(missing)}", fg="yellow")
        else:
            click.secho(f"ok ({len(registered)})", fg="green")

    for issue in issues:
        click.secho(f"x {issue}", fg="red")
    raise SystemExit(1 if issues else 0)


@mcp.command("start")
@click.option(
    "--transport",
    "-t",
    type=click.Choice(["stdio", "sse", "http"]),
    default="stdio",
    show_default=True,
)
@click.option("--host", "-h", default="127.0.0.1", show_default=True)
@click.option("--port", "-p", default=8087, type=int, show_default=True)
def start(transport: str, host: str, port: int):
    """Start the MCP server."""
    mcp_server = _load_server()
    click.secho(f"cayleyiso MCP on {transport}", fg="cyan", err=True)
    if transport == "stdio":
        mcp_server.run(transport="stdio")
    else:
        mcp_server.run(transport=transport, host=host, port=port)


# EOF

#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/_cli/__init__.py
"""CLI package for cayleyiso.

Entry point: cayleyiso  (maps to main() here)
"""

from __future__ import annotations

import importlib
import inspect
import logging

import click

from ._census import census
from ._ci import ci
from ._graph import graph
from ._group import group
from ._mcp import mcp

_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


def _print_help_recursive(ctx, group, prefix="cayleyiso"):
    """Recursively print help for a group and all its subcommands/subgroups."""
    click.secho(f"━━━ {prefix} ━━━", fg="cyan", bold=True)
    click.echo(group.get_help(ctx))

    for name in sorted(group.list_commands(ctx) or []):
        cmd = group.get_command(ctx, name)
        if cmd is None:
            continue
        sub_prefix = f"{prefix} {name}"
        with click.Context(cmd, info_name=name, parent=ctx) as sub_ctx:
            click.echo()
            if isinstance(cmd, click.Group):
                _print_help_recursive(sub_ctx, cmd, prefix=sub_prefix)
            else:
                click.secho(f"━━━ {sub_prefix} ━━━", fg="cyan", bold=True)
                click.echo(cmd.get_help(sub_ctx))


@click.group(invoke_without_command=True)
@click.version_option(package_name="cayleyiso")
@click.option(
    "--help-recursive", is_flag=True, help="Show help for all commands recursively"
)
@click.option("-v", "--verbose", count=True, help="Log level: -v info, -vv debug.")
@click.pass_context
def main(ctx, help_recursive, verbose):
    """cayleyiso: isomorphism properties of m-Cayley and bi-Cayley digraphs."""
    logging.basicConfig(
        level=_LEVELS[min(verbose, len(_LEVELS) - 1)],
        format="%(levelname)s %(name)s: %(message)s",
    )
    if help_recursive:
        _print_help_recursive(ctx, main)
        ctx.exit(0)
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


main.add_command(group)
main.add_command(graph)
main.add_command(ci)
main.add_command(census)
main.add_command(mcp)


_API_MODULES = ("perm", "groups", "mcayley", "iso", "ci", "census")


def _describe(name: str, obj, verbose: int) -> str:
    if isinstance(obj, type):
        return f"  {name}  [class]"
    if not callable(obj):
        return f"  {name} = {obj!r}" if verbose else f"  {name}"
    if not verbose:
        return f"  {name}"
    try:
        signature = str(inspect.signature(obj))
    except (ValueError, TypeError):
        signature = "(...)"
    line = f"  {click.style(name, bold=True)}{signature}"
    doc = inspect.getdoc(obj) if verbose >= 2 else None
    return f"{line}\n    {doc.splitlines()[0]}" if doc else line


@main.command("list-python-apis")
@click.option("-v", "--verbose", count=True, help="-v signatures, -vv first docstring line")
@click.option(
    "--module", "only", type=click.Choice(_API_MODULES), multiple=True, help="Restrict to these subpackages."
)
def list_python_apis(verbose: int, only: tuple[str, ...]):
    """List the public Python API of each cayleyiso subpackage."""
    for mod_name in only or _API_MODULES:
        mod = importlib.import_module(f"cayleyiso.{mod_name}")
        names = sorted(getattr(mod, "__all__", []))
        click.secho(f"{mod_name}: {len(names)} APIs", fg="green", bold=True)
        for name in names:
            obj = getattr(mod, name, None)
            if obj is not None:
                click.echo(_describe(name, obj, verbose))
        click.echo()


__all__ = ["main"]

# EOF

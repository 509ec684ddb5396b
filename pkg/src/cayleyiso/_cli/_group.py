#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/_cli/_group.py
"""CLI group sub-group: inspect finite groups."""

from __future__ import annotations

import click

from ._common import badge, config_options, emit, kv, load_group


@click.group()
def group():
    """Inspect finite groups: structure, automorphisms, subgroups, 2PCI screen."""


@group.command("info")
@click.option("--group", "group_spec", required=True, help="Group spec, e.g. Z4xZ2, Dic12.")
@config_options
def group_info(group_spec, config):
    """Order, type, element orders and solvability of a group."""
    from ..groups import automorphism_count, describe_group, is_solvable

    g = load_group(group_spec)
    orders = g.element_orders()
    report = {
        "group": g.name,
        "order": g.order,
        "type": describe_group(g),
        "abelian": g.is_abelian(),
        "solvable": is_solvable(g),
        "automorphism_order": automorphism_count(g, config),
        "element_orders": {str(k): orders.count(k) for k in sorted(set(orders))},
        "elements": list(g.labels),
    }

    def human():
        click.secho(f"{g.name}", fg="cyan", bold=True)
        for key in ("order", "type", "abelian", "solvable", "automorphism_order"):
            kv(key, report[key])
        kv("element_orders", [f"{k}:{v}" for k, v in report["element_orders"].items()])

    emit(report, config, human)


@group.command("aut")
@click.option("--group", "group_spec", required=True, help="Group spec.")
@config_options
def group_aut(group_spec, config):
    """Order and generators of Aut(G)."""
    from ..groups import automorphism_count, automorphism_generators

    g = load_group(group_spec)
    gens = automorphism_generators(g, config)
    report = {
        "group": g.name,
        "automorphism_order": automorphism_count(g, config),
        "generators": [a.to_json()["images"] for a in gens],
    }

    def human():
        kv("automorphism_order", report["automorphism_order"])
        kv("generators", len(gens))
        for images in report["generators"]:
            click.echo("  " + " ".join(images))

    emit(report, config, human)


@group.command("subgroups")
@click.option("--group", "group_spec", required=True, help="Group spec.")
@click.option("--order", "order", type=int, help="Only subgroups of this order.")
@click.option("--normal", is_flag=True, help="Only normal subgroups.")
@config_options
def group_subgroups(group_spec, order, normal, config):
    """List subgroups with their order and normality."""
    from ..groups import all_subgroups, automorphism_generators, characteristic_subgroups

    g = load_group(group_spec)
    characteristic = set(characteristic_subgroups(g, automorphism_generators(g, config), config))
    rows = []
    for h in all_subgroups(g, config):
        if order is not None and h.order != order:
            continue
        if normal and not h.is_normal():
            continue
        rows.append(
            {
                "order": h.order,
                "normal": h.is_normal(),
                "characteristic": h in characteristic,
                "members": h.labels(),
            }
        )
    report = {"group": g.name, "count": len(rows), "subgroups": rows}

    def human():
        kv("count", len(rows))
        for row in rows:
            tags = [t for t in ("normal", "characteristic") if row[t]]
            suffix = f"  [{', '.join(tags)}]" if tags else ""
            click.echo(f"  |H|={row['order']:<3} {{{','.join(row['members'])}}}{suffix}")

    emit(report, config, human)


@group.command("screen")
@click.option("--group", "group_spec", required=True, help="Group spec.")
@config_options
def group_screen(group_spec, config):
    """Run the necessary conditions for 2PCI, then the census if it fits."""
    from ..census import group_2pci_screen

    g = load_group(group_spec)
    report = group_2pci_screen(g, config)

    def human():
        click.secho(f"2PCI screen: {g.name}", fg="cyan", bold=True)
        for name, cond in report["conditions"].items():
            click.echo(f"  {badge(cond['pass'])} {name}")
        kv("solvable", report["solvable"])
        kv("eliminated_by", report["eliminated_by"])
        if report["exhaustive"] is not None:
            kv("two_pci", report["exhaustive"]["result"])

    emit(report, config, human)


# EOF

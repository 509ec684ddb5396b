#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/_cli/_census.py
"""CLI census sub-group: subset orbits, whole-group classification, the
exceptional-group table, the registry and the Z2^n reduction."""

from __future__ import annotations

import click

from .._errors import MalformedInputError
from ._common import badge, config_options, emit, exit_for, fmt, kv, load_group


@click.group()
def census():
    """Enumerate connection sets and classify groups."""


def _parse_sizes(text: str) -> list[int]:
    """``"3"``, ``"2-4"`` or ``"1,3,5"``."""
    sizes = []
    for item in text.split(","):
        item = item.strip()
        lo, sep, hi = item.partition("-")
        try:
            sizes += list(range(int(lo), int(hi) + 1)) if sep else [int(item)]
        except ValueError:
            raise MalformedInputError(f"bad size list {text!r}") from None
    return sizes


@census.command("orbits")
@click.option("--group", "group_spec", required=True, help="Group spec.")
@click.option("--sizes", required=True, help="Subset sizes: 3, 2-4 or 1,3,5.")
@click.option(
    "--action",
    type=click.Choice(["k", "stabilizer", "aut"]),
    default="k",
    help="Acting group: translations and automorphisms, left translations and automorphisms, or automorphisms.",
)
@click.option("--contains-identity", is_flag=True, help="Only sets containing 1.")
@click.option("--generates", is_flag=True, help="Only sets generating G.")
@click.option("--classes", is_flag=True, help="Also split representatives by isomorphism class.")
@config_options
def census_orbits(group_spec, sizes, action, contains_identity, generates, classes, config):
    """One representative per orbit of connection sets."""
    from ..census import iso_class_partition, k_orbits_on_subsets

    g = load_group(group_spec)
    index = k_orbits_on_subsets(
        g,
        _parse_sizes(sizes),
        config,
        action=action,
        contains_identity=contains_identity,
        generates=generates,
    )
    report = index.to_json()
    if classes:
        partition = iso_class_partition(g, index.representatives(), config)
        report["iso_classes"] = [[g.set_labels(s) for s in c] for c in partition]

    def human():
        kv("orbits", len(index.orbits))
        kv("admissible", index.admissible_count)
        kv("action_order", index.action_order)
        for row in report["orbits"]:
            click.echo(f"  {{{','.join(row['rep'])}}}  orbit_size={row['orbit_size']}")
        if classes:
            kv("iso_classes", len(report["iso_classes"]))

    emit(report, config, human)


@census.command("classify")
@click.option("--group", "group_spec", required=True, help="Group spec.")
@click.option(
    "--property", "prop", type=click.Choice(["k2pci", "2pci"]), default="k2pci", help="Group property."
)
@click.option("--store", type=click.Path(file_okay=False), help="Checkpoint directory.")
@click.option("--expect", type=click.Choice(["Y", "N"]), help="Expected column; mismatch exits 2.")
@config_options
def census_classify(group_spec, prop, store, expect, config):
    """Is every group-level isomorphism class a single kernel orbit?"""
    from pathlib import Path

    from ..census import k2pci_group_test, two_pci_group_test

    g = load_group(group_spec)
    if store:
        Path(store).mkdir(parents=True, exist_ok=True)
    test = k2pci_group_test if prop == "k2pci" else two_pci_group_test
    verdict = test(g, config, store)
    computed = "Y" if verdict.result else "N"
    ok = None if expect is None else computed == expect
    report = verdict.to_json() | {"column": computed, "expected": expect, "match": ok}

    def human():
        prefix = f"{badge(ok)} " if ok is not None else ""
        click.echo(f"{prefix}{g.name} {prop}={computed}")
        if verdict.certificate:
            cert = verdict.certificate
            click.echo(f"  S={{{','.join(cert['S'])}}}  T={{{','.join(cert['T'])}}}")

    emit(report, config, human)
    exit_for(ok)


@census.command("table1")
@click.option("--max-order", type=int, default=18, show_default=True, help="Largest order recomputed.")
@config_options
def census_table1(max_order, config):
    """Recompute the K2PCI column of the exceptional-group table."""
    from ..census import table1_report

    report = table1_report(max_order, config)

    def human():
        click.secho("Exceptional groups: K2PCI column", fg="cyan", bold=True)
        for row in report["rows"]:
            if row["skipped"]:
                click.secho(f"  [SKIP] {row['group']:<10} expected={row['expected']}", fg="yellow")
            else:
                click.echo(
                    f"  {badge(row['match'])} {row['group']:<10} "
                    f"expected={row['expected']} computed={row['computed']}"
                )
        kv("checked", report["checked"])
        kv("all_match", report["all_match"])

    emit(report, config, human)
    exit_for(report["all_match"])


@census.command("registry")
@click.argument("case_id")
@click.option("--fast", is_flag=True, help="With 'all', skip the slow cases.")
@config_options
def census_registry(case_id, fast, config):
    """Verify one registry case, or 'all'."""
    from ..census import verify_all, verify_registry_case

    if case_id == "all":
        report = verify_all(config, include_slow=not fast)
        cases = report["cases"]
        ok = report["pass"]
    else:
        report = verify_registry_case(case_id, config)
        cases = [report]
        ok = report["pass"]

    def human():
        for case in cases:
            click.echo(f"{badge(case['pass'])} {case['id']} ({case['group']})")
            for row in case["checks"]:
                mark = "" if row["pass"] else f"  expected={fmt(row['expected'])}"
                click.echo(f"    {row['check']}={fmt(row['observed'])}{mark}")
        for skipped in report.get("skipped", []):
            click.secho(f"[SKIP] {skipped}", fg="yellow")

    emit(report, config, human)
    exit_for(ok)


@census.command("rank4")
@click.option("--no-semiregular", is_flag=True, help="Skip the per-class semiregular check.")
@config_options
def census_rank4(no_semiregular, config):
    """Reduce connected BCay(Z2^4, S) of valency 6-8 to the twelve normal forms."""
    from ..census import rank4_classes

    report = rank4_classes(config, check_semiregular=not no_semiregular)
    ok = report["tails_matched"] and report.get("all_single_class", True)

    def human():
        for row in report["classes"]:
            extension = ",".join(row["normal_form"])
            line = f"  |S|={row['size']} T'={{{extension}}}"
            if "semiregular_classes" in row:
                line += f" semiregular_classes={row['semiregular_classes']}"
            click.echo(line)
        kv("class_count", report["class_count"])
        click.echo(f"{badge(report['tails_matched'])} tails_matched")
        if "all_single_class" in report:
            click.echo(f"{badge(report['all_single_class'])} all_single_class")

    emit(report, config, human)
    exit_for(ok)


@census.command("rank5")
@click.option("--sizes", default="7-16", show_default=True, help="Subset sizes.")
@config_options
def census_rank5(sizes, config):
    """Z2^5 census over connection sets containing 1 (needs --stretch-z2-5)."""
    from ..census import rank5_census

    report = rank5_census(config, _parse_sizes(sizes))

    def human():
        for row in report["sizes"]:
            click.echo(f"  {badge(not row['merged'])} |S|={row['size']} orbits={row['orbits']}")
        kv("all_singleton", report["all_singleton"])

    emit(report, config, human)
    exit_for(report["all_singleton"])


# EOF

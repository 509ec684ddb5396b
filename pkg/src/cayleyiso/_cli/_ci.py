#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/_cli/_ci.py
"""CLI ci sub-group: Cayley isomorphism decisions on one digraph."""

from __future__ import annotations

import click

from ._common import badge, config_options, emit, exit_for, kv, load_target, require_set, target_options

_EXPECT = click.option(
    "--expect",
    type=click.Choice(["true", "false"]),
    help="Expected result; a mismatch exits with status 2.",
)
_ROUTE = click.option(
    "--route",
    type=click.Choice(["auto", "exhaustive", "criterion"]),
    default="auto",
    help="Decision route for 2PCI/K2PCI.",
)


@click.group()
def ci():
    """Decide KmCI, KmPCI, 2PCI, K2PCI, condition 3 and vertex-transitivity."""


def _report_verdict(verdict, config, expect):
    report = verdict.to_json()
    ok = None if expect is None else verdict.result == (expect == "true")
    report["expected"] = expect
    report["match"] = ok

    def human():
        prefix = f"{badge(ok)} " if ok is not None else ""
        click.echo(f"{prefix}{verdict.property}={'true' if verdict.result else 'false'}")
        kv("route", verdict.route)
        if verdict.certificate:
            kv("certificate", verdict.certificate.get("kind"))
        for key, value in sorted(verdict.budget_used.items()):
            kv(key, value)

    emit(report, config, human)
    exit_for(ok)


@ci.command("kmci")
@target_options
@_EXPECT
@config_options
def ci_kmci(group_spec, bcay_text, set_text, symbol_file, expect, config):
    """KmCI of an m-Cayley digraph."""
    from ..ci import kmci_test

    _, _, d = load_target(group_spec, bcay_text, set_text, symbol_file)
    _report_verdict(kmci_test(d, config), config, expect)


@ci.command("kmpci")
@target_options
@_EXPECT
@config_options
def ci_kmpci(group_spec, bcay_text, set_text, symbol_file, expect, config):
    """KmPCI of an m-PCayley digraph (empty diagonal)."""
    from ..ci import kmpci_test

    _, _, d = load_target(group_spec, bcay_text, set_text, symbol_file)
    _report_verdict(kmpci_test(d, config), config, expect)


@ci.command("2pci")
@target_options
@_ROUTE
@_EXPECT
@config_options
def ci_2pci(group_spec, bcay_text, set_text, symbol_file, route, expect, config):
    """2PCI of BCay(G, S)."""
    from ..ci import two_pci_graph_test

    g, s, _ = load_target(group_spec, bcay_text, set_text, symbol_file)
    _report_verdict(two_pci_graph_test(g, require_set(s), config, route), config, expect)


@ci.command("k2pci")
@target_options
@_ROUTE
@click.option("--stabilizer-form", is_flag=True, help="Use the vertex-stabilizer orbits.")
@_EXPECT
@config_options
def ci_k2pci(group_spec, bcay_text, set_text, symbol_file, route, stabilizer_form, expect, config):
    """K2PCI of BCay(G, S)."""
    from ..ci import k2pci_graph_test, stabilizer_form_k2pci

    g, s, _ = load_target(group_spec, bcay_text, set_text, symbol_file)
    s = require_set(s)
    if stabilizer_form:
        verdict = stabilizer_form_k2pci(g, s, config)
    else:
        verdict = k2pci_graph_test(g, s, config, route)
    _report_verdict(verdict, config, expect)


@ci.command("bci3")
@target_options
@click.option("--three-way", is_flag=True, help="Also compare K2PCI and normalizer transitivity.")
@_EXPECT
@config_options
def ci_bci3(group_spec, bcay_text, set_text, symbol_file, three_way, expect, config):
    """Is there an automorphism alpha with S^alpha = S^-1 c?"""
    from ..ci import bci3_verdict, three_way_bci_check

    g, s, _ = load_target(group_spec, bcay_text, set_text, symbol_file)
    s = require_set(s)
    if not three_way:
        _report_verdict(bci3_verdict(g, s, config), config, expect)
        return
    report = three_way_bci_check(g, s, config)

    def human():
        for key in ("two_pci", "applicable", "k2pci", "normalizer_transitive", "condition3"):
            if key in report:
                kv(key, report[key])
        if report.get("applicable"):
            click.echo(f"{badge(report['agree'])} three_way_agree")

    emit(report, config, human)
    exit_for(report.get("agree"))


@ci.command("vtx")
@target_options
@_EXPECT
@config_options
def ci_vtx(group_spec, bcay_text, set_text, symbol_file, expect, config):
    """Vertex-transitivity of the digraph."""
    from ..ci import is_vertex_transitive

    g, _, d = load_target(group_spec, bcay_text, set_text, symbol_file)
    result = is_vertex_transitive(d, config)
    ok = None if expect is None else result == (expect == "true")
    report = {"group": g.name, "vertex_transitive": result, "expected": expect, "match": ok}

    def human():
        prefix = f"{badge(ok)} " if ok is not None else ""
        click.echo(f"{prefix}vertex_transitive={'true' if result else 'false'}")

    emit(report, config, human)
    exit_for(ok)


# EOF

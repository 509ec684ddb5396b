#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/_cli/_graph.py
"""CLI graph sub-group: build m-Cayley digraphs, their automorphisms,
canonical forms and isomorphism tests."""

from __future__ import annotations

from pathlib import Path

import click

from ._common import badge, config_options, emit, exit_for, kv, load_target, target_options


@click.group()
def graph():
    """Build and inspect m-Cayley digraphs."""


@graph.command("build")
@target_options
@click.option("--out", "-o", type=click.Path(), help="Write the digraph text format here.")
@config_options
def graph_build(group_spec, bcay_text, set_text, symbol_file, out, config):
    """Build BCay(G, S) or an m-Cayley digraph and print its symbol."""
    from ..mcayley import digraph_to_json, is_connected_bcay, symbol_to_text

    g, s, d = load_target(group_spec, bcay_text, set_text, symbol_file)
    text = symbol_to_text(g, d.symbol)
    if out:
        Path(out).write_text(text)
    report = {
        "group": g.name,
        "m": d.m,
        "vertices": d.n_vertices,
        "arcs": d.arc_count(),
        "undirected": d.is_symmetric(),
        "symbol": d.symbol.to_json(g),
        "adjacency": digraph_to_json(d)["adjacency"],
    }
    if s is not None:
        report["connected"] = is_connected_bcay(g, s)

    def human():
        if out:
            click.secho(f"Wrote: {out}", fg="green")
        else:
            click.echo(text, nl=False)
        for key in ("vertices", "arcs", "undirected", "connected"):
            if key in report:
                kv(key, report[key])

    emit(report, config, human)


@graph.command("aut")
@target_options
@config_options
def graph_aut(group_spec, bcay_text, set_text, symbol_file, config):
    """Automorphism group order, with and without the part colouring."""
    from ..ci import normalizer_in_aut
    from ..iso import ColoredDigraph, automorphisms

    g, _, d = load_target(group_spec, bcay_text, set_text, symbol_file)
    full = automorphisms(ColoredDigraph.from_adjacency(d.adjacency), "fixed", config)
    fixed = automorphisms(ColoredDigraph.from_mcayley(d), "fixed", config)
    normalizer = normalizer_in_aut(d, config)
    report = {
        "group": g.name,
        "automorphism_order": full.order(),
        "part_fixing_order": fixed.order(),
        "normalizer_order": normalizer.order(),
        "right_regular_normal": normalizer.order() == full.order(),
        "vertex_transitive": full.is_transitive(),
        "generators": [list(p.images) for p in full.generators],
    }

    def human():
        for key in (
            "automorphism_order",
            "part_fixing_order",
            "normalizer_order",
            "right_regular_normal",
            "vertex_transitive",
        ):
            kv(key, report[key])

    emit(report, config, human)


@graph.command("canon")
@target_options
@click.option(
    "--mode",
    type=click.Choice(["fixed", "permutable"]),
    default="fixed",
    help="fixed: parts keep their colour; permutable: parts may be exchanged.",
)
@config_options
def graph_canon(group_spec, bcay_text, set_text, symbol_file, mode, config):
    """Canonical form (hex) of the part-coloured digraph."""
    from ..iso import CANON_VERSION, ColoredDigraph, canonical

    _, _, d = load_target(group_spec, bcay_text, set_text, symbol_file)
    form = canonical(ColoredDigraph.from_mcayley(d), mode, config)
    report = {"mode": mode, "version": CANON_VERSION, "canonical": form.hex()}
    emit(report, config, lambda: kv("canonical", report["canonical"]))


@graph.command("iso")
@click.option("--group", "group_spec", help="Group spec shared by both sides.")
@click.option("--bcay", "bcay_text", help="S of the first BCay(G, S).")
@click.option("--other", "other_text", help="T of the second BCay(G, T).")
@click.option("--symbol", "symbol_file", type=click.Path(), help="First symbol file.")
@click.option("--other-symbol", "other_file", type=click.Path(), help="Second symbol file.")
@click.option("--mode", type=click.Choice(["fixed", "permutable"]), default="permutable")
@config_options
def graph_iso(group_spec, bcay_text, other_text, symbol_file, other_file, mode, config):
    """Are two m-Cayley digraphs isomorphic? Prints a witness bijection."""
    from ..iso import ColoredDigraph, find_isomorphism

    _, _, d1 = load_target(group_spec, bcay_text, None, symbol_file)
    _, _, d2 = load_target(group_spec, other_text, None, other_file)
    iso = find_isomorphism(ColoredDigraph.from_mcayley(d1), ColoredDigraph.from_mcayley(d2), mode, config)
    report = {"mode": mode, "isomorphic": iso is not None, "map": list(iso.images) if iso else None}
    emit(report, config, lambda: kv("isomorphic", report["isomorphic"]))


@graph.command("check-normalizer")
@target_options
@click.option("--samples", default=100, show_default=True, type=click.IntRange(min=1))
@config_options
def graph_check_normalizer(group_spec, bcay_text, set_text, symbol_file, samples, config):
    """Compare symbol images with vertex images for seeded random elements of N."""
    from ..mcayley import check_symbol_images

    g, _, d = load_target(group_spec, bcay_text, set_text, symbol_file)
    bad = check_symbol_images(d, samples, config)
    report = {
        "group": g.name,
        "m": d.m,
        "samples": samples,
        "seed": config.seed,
        "mismatches": [n.to_json() for n in bad],
    }

    def human():
        click.echo(f"{badge(not bad)} symbol_images samples={samples} seed={config.seed}")
        kv("mismatches", len(bad))

    emit(report, config, human)
    exit_for(not bad)


# EOF

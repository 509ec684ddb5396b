#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/_cli/_common.py
"""Options, target loading and output helpers shared by the CLI groups."""

from __future__ import annotations

import functools
from contextlib import contextmanager
from pathlib import Path

import click

from .._config import RunConfig
from .._errors import CayleyIsoError, MalformedInputError
from .._report import error_report, to_json_text, write_report

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2


# ---------------------------------------------------------------------------
# Options
# ---------------------------------------------------------------------------


def config_options(func):
    """Budget, seed and report-path flags; the wrapped command receives a
    ready ``config`` instead."""

    @click.option("--budget-aut", type=int, help="Largest |G| with a full Aut(G) list.")
    @click.option("--budget-search", type=int, help="Node budget of backtrack searches.")
    @click.option("--budget-census", type=int, help="Largest subset census enumerated directly.")
    @click.option("--seed", type=int, help="Seed for randomized steps.")
    @click.option("--stretch-z2-5", "stretch", is_flag=True, help="Enable the Z2^5 census.")
    @click.option("--json", "json_path", help="Write a JSON report ('-' for stdout).")
    @click.option("--tsv", "tsv_path", type=click.Path(), help="Write a TSV report.")
    @functools.wraps(func)
    def wrapper(*args, budget_aut, budget_search, budget_census, seed, stretch, json_path, tsv_path, **kwargs):
        with cli_errors(json_path):
            config = RunConfig.from_env().with_overrides(
                aut_bound=budget_aut,
                search_budget=budget_search,
                census_budget=budget_census,
                seed=seed,
                stretch_z2_5=True if stretch else None,
                json_path=Path(json_path) if json_path else None,
                tsv_path=Path(tsv_path) if tsv_path else None,
            )
            return func(*args, config=config, **kwargs)

    return wrapper


def target_options(func):
    """``--group`` with ``--bcay``/``--set``, or ``--symbol <file>``."""
    func = click.option(
        "--symbol", "symbol_file", type=click.Path(), help="m-Cayley symbol file (digraph text format)."
    )(func)
    func = click.option("--set", "set_text", help="Connection set of BCay(G, S); same as --bcay.")(func)
    func = click.option("--bcay", "bcay_text", help="Comma-separated labels of S for BCay(G, S).")(func)
    func = click.option("--group", "group_spec", help="Group spec, e.g. Z4, D8, Z2^4, A5.")(func)
    return func


def load_group(group_spec):
    from ..groups import named_group

    if not group_spec:
        raise MalformedInputError("--group is required")
    return named_group(group_spec)


def load_target(group_spec, bcay_text=None, set_text=None, symbol_file=None):
    """``(group, S or None, digraph)`` from the target options.

    Raises
    ------
    MalformedInputError
        If neither or both of a set and a symbol file are given.
    FileNotFoundError
        If the symbol file does not exist.
    """
    from ..mcayley import build_bcay, build_mcayley, symbol_from_text

    text = bcay_text if bcay_text is not None else set_text
    if symbol_file and text is not None:
        raise MalformedInputError("give either --symbol or a connection set, not both")
    if symbol_file:
        content = Path(symbol_file).read_text()
        g = load_group(group_spec) if group_spec else None
        g, sym = symbol_from_text(content, g)
        return g, None, build_mcayley(g, sym)
    if text is None:
        raise MalformedInputError("give --symbol, or --group with --bcay/--set")
    g = load_group(group_spec)
    s = g.parse_set(text)
    return g, s, build_bcay(g, s)


def require_set(s):
    if s is None:
        raise MalformedInputError("this command needs --group with --bcay/--set")
    return s


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------


def badge(ok: bool) -> str:
    return click.style("[PASS]", fg="green", bold=True) if ok else click.style("[FAIL]", fg="red", bold=True)


def fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    if isinstance(value, (list, tuple)):
        return "{" + ",".join(map(str, value)) + "}"
    return str(value)


def kv(key: str, value) -> None:
    click.echo(f"{key}={fmt(value)}")


def emit(report: dict, config: RunConfig, human) -> None:
    """Write report files; print JSON for ``--json -``, else call
    ``human()`` for the text rendering."""
    text = write_report(report, config.json_path, config.tsv_path)
    if text is not None:
        click.echo(text, nl=False)
    else:
        human()


@contextmanager
def cli_errors(json_path=None):
    """Turn library errors into a red ERROR line, an error report and
    exit status 1."""
    try:
        yield
    except (CayleyIsoError, FileNotFoundError) as exc:
        report = error_report(exc)
        if json_path == "-":
            click.echo(to_json_text(report), nl=False)
        elif json_path:
            Path(json_path).write_text(to_json_text(report))
        click.secho(f"ERROR: {exc}", fg="red", err=True)
        raise SystemExit(EXIT_ERROR) from None


def exit_for(ok: bool | None) -> None:
    """Exit 2 when an expectation was checked and missed."""
    if ok is False:
        raise SystemExit(EXIT_MISMATCH)


# EOF

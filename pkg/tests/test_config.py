#!/usr/bin/env python3
"""Tests for RunConfig and the JSON/TSV report writers."""

import json
from pathlib import Path

import pytest

from cayleyiso import MalformedInputError, RunConfig
from cayleyiso._config import ENV_VAR, parse_budget_string, resolve
from cayleyiso._report import error_report, flatten, to_json_text, to_tsv_text, write_report

# ---------------------------------------------------------------------------
# RunConfig
# ---------------------------------------------------------------------------


def test_defaults():
    config = RunConfig()
    assert config.aut_bound == 60
    assert config.search_budget == 200_000
    assert config.census_budget == 10_000_000
    assert not config.stretch_z2_5


def test_from_env():
    config = RunConfig.from_env({ENV_VAR: "aut=32, search=5e5,census=1000"})
    assert config.aut_bound == 32
    assert config.search_budget == 500_000
    assert config.census_budget == 1000
    assert RunConfig.from_env({}) == RunConfig()


@pytest.mark.parametrize("raw", ["nope=3", "aut", "aut=many"])
def test_bad_env(raw):
    with pytest.raises(MalformedInputError):
        parse_budget_string(raw)


def test_budgets_must_be_positive():
    with pytest.raises(MalformedInputError):
        RunConfig(search_budget=0)


def test_with_overrides_skips_none():
    config = RunConfig()
    assert config.with_overrides(seed=None) is config
    changed = config.with_overrides(seed=7, json_path=Path("out.json"))
    assert changed.seed == 7
    assert changed.to_dict()["json_path"] == "out.json"


def test_resolve(monkeypatch):
    monkeypatch.setenv(ENV_VAR, "aut=16")
    assert resolve(None).aut_bound == 16
    explicit = RunConfig()
    assert resolve(explicit) is explicit


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


def test_json_is_sorted_and_handles_sets():
    text = to_json_text({"b": frozenset({2, 1}), "a": Path("x")})
    assert text == '{\n  "a": "x",\n  "b": [\n    1,\n    2\n  ]\n}\n'


def test_flatten():
    rows = flatten({"z": [True, None], "a": {"k": 1}, "e": []})
    assert rows == [("a.k", "1"), ("e", "[]"), ("z.0", "true"), ("z.1", "")]


def test_tsv():
    assert to_tsv_text({"result": False, "group": "Z4"}) == "group\tZ4\nresult\tfalse\n"


def test_write_report(tmp_path):
    report = {"result": True}
    assert write_report(report, "-") == to_json_text(report)
    json_path, tsv_path = tmp_path / "r.json", tmp_path / "r.tsv"
    assert write_report(report, json_path, tsv_path) is None
    assert json.loads(json_path.read_text()) == report
    assert tsv_path.read_text() == "result\ttrue\n"


def test_error_report():
    assert error_report(MalformedInputError("bad")) == {"error": "MalformedInputError", "message": "bad"}


# EOF

#!/usr/bin/env python3
"""Tests for the registry of explicit connection sets and symbols."""

import json

import pytest

from cayleyiso import MalformedInputError
from cayleyiso.census import (
    CHECKS,
    RegistryCase,
    load_registry,
    registry_case,
    symbol_from_json,
    kmci_witnesses,
    verify_all,
    verify_registry_case,
)
from cayleyiso.groups import named_group

CASES = load_registry()
FAST = [c.id for c in CASES if not c.slow]
SLOW = [c.id for c in CASES if c.slow]


def test_registry_shape():
    assert len(CASES) == 15
    assert len({c.id for c in CASES}) == 15
    assert set(SLOW) == {"A5-not-2PCI", "F8-not-2PCI", "Z27-not-2PCI", "Z3^3-not-K2PCI"}
    for case in CASES:
        assert set(case.checks) <= set(CHECKS)


def test_every_case_builds():
    for case in CASES:
        g, s, d = case.build()
        assert g.name == case.group
        assert d.n_vertices == d.m * g.order
        if case.set_text is not None:
            assert len(s) == len(case.set_text.split(","))


@pytest.mark.parametrize("case_id", FAST)
def test_fast_cases(case_id, config):
    report = verify_registry_case(case_id, config)
    assert report["pass"], report["checks"]


@pytest.mark.slow
@pytest.mark.parametrize("case_id", SLOW)
def test_slow_cases(case_id, config):
    report = verify_registry_case(case_id, config)
    assert report["pass"], report["checks"]


def test_verify_all_skips_slow_cases(config):
    report = verify_all(config, include_slow=False, kind="witness")
    assert report["pass"]
    assert report["skipped"] == []
    assert len(report["cases"]) == len(kmci_witnesses()) == 7


def test_report_fields(config):
    report = verify_registry_case(registry_case("trivial-m2-arc"), config)
    assert report["kind"] == "witness"
    assert report["checks"][0] == {"check": "kmci", "expected": False, "observed": False, "pass": True}


def test_unknown_case():
    with pytest.raises(MalformedInputError):
        registry_case("Z9-nothing")


@pytest.mark.parametrize(
    "data",
    [
        {"id": "x", "kind": "witness", "group": "Z2", "checks": {}},
        {"id": "x", "kind": "conjecture", "group": "Z2", "set": "0", "checks": {}, "claim": ""},
        {"id": "x", "kind": "witness", "group": "Z2", "checks": {}, "claim": ""},
        {"id": "x", "kind": "witness", "group": "Z2", "set": "0", "checks": {"girth": 4}, "claim": ""},
    ],
)
def test_malformed_cases(data):
    with pytest.raises(MalformedInputError):
        RegistryCase.from_json(data)


def test_duplicate_ids(tmp_path):
    case = {"id": "x", "kind": "witness", "group": "Z2", "set": "0", "checks": {}, "claim": ""}
    path = tmp_path / "registry.json"
    path.write_text(json.dumps({"schema_version": "1.0", "cases": [case, case]}))
    with pytest.raises(MalformedInputError):
        load_registry(path)


def test_set_check_on_symbol_case(config):
    case = RegistryCase.from_json(
        {"id": "x", "kind": "witness", "group": "1", "symbol": {"m": 2, "sets": []}, "checks": {"two_pci": True}, "claim": ""}
    )
    with pytest.raises(MalformedInputError):
        verify_registry_case(case, config)


def test_symbol_from_json_is_one_based():
    g = named_group("Z3")
    sym = symbol_from_json(g, {"m": 2, "sets": [{"i": 1, "j": 2, "elements": ["x"]}]})
    assert sym.get(0, 1) == frozenset({1})


# EOF

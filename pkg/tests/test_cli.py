#!/usr/bin/env python3
"""Tests for the cayleyiso command line."""

import json

import pytest
from click.testing import CliRunner

from cayleyiso._cli import main


@pytest.fixture
def runner():
    return CliRunner()


# ---------------------------------------------------------------------------
# Top level
# ---------------------------------------------------------------------------


def test_help(runner):
    result = runner.invoke(main, ["--help"])
    assert result.exit_code == 0
    for name in ("group", "graph", "ci", "census", "mcp"):
        assert name in result.output


def test_help_recursive(runner):
    result = runner.invoke(main, ["--help-recursive"])
    assert result.exit_code == 0
    assert "cayleyiso census table1" in result.output
    assert "cayleyiso ci 2pci" in result.output


def test_bare_command_prints_help(runner):
    result = runner.invoke(main, [])
    assert result.exit_code == 0
    assert "Commands:" in result.output


def test_list_python_apis(runner):
    result = runner.invoke(main, ["list-python-apis", "-v"])
    assert result.exit_code == 0
    assert "census:" in result.output
    assert "two_pci_graph_test" in result.output


def test_list_python_apis_one_module(runner):
    result = runner.invoke(main, ["list-python-apis", "--module", "perm"])
    assert result.exit_code == 0
    assert "perm:" in result.output
    assert "census:" not in result.output


def test_bad_budget_env(runner):
    result = runner.invoke(main, ["group", "info", "--group", "Z4"], env={"CAYLEYISO_BUDGETS": "bogus=1"})
    assert result.exit_code == 1
    assert "ERROR" in result.output


# ---------------------------------------------------------------------------
# group
# ---------------------------------------------------------------------------


def test_group_info_json(runner):
    result = runner.invoke(main, ["group", "info", "--group", "Z4xZ2", "--json", "-"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["order"] == 8
    assert data["automorphism_order"] == 8
    assert data["element_orders"] == {"1": 1, "2": 3, "4": 4}


def test_group_info_bad_spec(runner, tmp_path):
    out = tmp_path / "err.json"
    result = runner.invoke(main, ["group", "info", "--group", "Foo", "--json", str(out)])
    assert result.exit_code == 1
    assert "ERROR" in result.output
    assert json.loads(out.read_text())["error"] == "GroupSpecError"


def test_group_subgroups(runner):
    result = runner.invoke(main, ["group", "subgroups", "--group", "Z4xZ2", "--order", "2"])
    assert result.exit_code == 0
    assert "count=3" in result.output
    assert "characteristic" in result.output


def test_group_screen(runner):
    result = runner.invoke(main, ["group", "screen", "--group", "Z8"])
    assert result.exit_code == 0
    assert "[FAIL] sylow_condition" in result.output


# ---------------------------------------------------------------------------
# graph
# ---------------------------------------------------------------------------


def test_graph_build(runner):
    result = runner.invoke(main, ["graph", "build", "--group", "Z4", "--bcay", "0,1"])
    assert result.exit_code == 0
    assert result.output.startswith("mcay m=2 n=4 group=Z4\n")
    assert "vertices=8" in result.output
    assert "connected=true" in result.output


def test_graph_build_needs_a_target(runner):
    result = runner.invoke(main, ["graph", "build", "--group", "Z4"])
    assert result.exit_code == 1


def test_symbol_file_round_trip(runner, tmp_path):
    path = tmp_path / "c8.mcay"
    result = runner.invoke(main, ["graph", "build", "--group", "Z4", "--bcay", "0,1", "-o", str(path)])
    assert result.exit_code == 0
    assert path.read_text().startswith("mcay m=2")
    result = runner.invoke(main, ["ci", "kmci", "--symbol", str(path), "--expect", "true"])
    assert result.exit_code == 0
    assert "[PASS] kmci=true" in result.output


def test_missing_symbol_file(runner, tmp_path):
    result = runner.invoke(main, ["ci", "kmci", "--symbol", str(tmp_path / "absent.mcay")])
    assert result.exit_code == 1


def test_graph_aut(runner):
    result = runner.invoke(main, ["graph", "aut", "--group", "Z3", "--bcay", "0,1", "--json", "-"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["automorphism_order"] == 12
    assert data["part_fixing_order"] == 6
    assert data["right_regular_normal"]


@pytest.mark.parametrize("other, expected", [("1,2", "isomorphic=true"), ("0,2", "isomorphic=false")])
def test_graph_iso(runner, other, expected):
    result = runner.invoke(main, ["graph", "iso", "--group", "Z4", "--bcay", "0,1", "--other", other])
    assert result.exit_code == 0
    assert expected in result.output


def test_graph_canon_is_set_invariant(runner):
    outputs = []
    for s in ("0,1", "2,3"):
        result = runner.invoke(main, ["graph", "canon", "--group", "Z4", "--bcay", s])
        assert result.exit_code == 0
        outputs.append(result.output)
    assert outputs[0] == outputs[1]


def test_graph_check_normalizer(runner):
    args = ["graph", "check-normalizer", "--group", "Z8", "--bcay", "0,1,2,5", "--samples", "20", "--seed", "5"]
    result = runner.invoke(main, args)
    assert result.exit_code == 0
    assert "[PASS] symbol_images samples=20 seed=5" in result.output


# ---------------------------------------------------------------------------
# ci
# ---------------------------------------------------------------------------


def test_ci_2pci_expectation(runner):
    args = ["ci", "2pci", "--group", "Z8", "--bcay", "0,1,2,5"]
    result = runner.invoke(main, args + ["--expect", "false"])
    assert result.exit_code == 0
    assert "[PASS] 2pci=false" in result.output
    result = runner.invoke(main, args + ["--expect", "true"])
    assert result.exit_code == 2
    assert "[FAIL] 2pci=false" in result.output


def test_ci_tsv_report(runner, tmp_path):
    path = tmp_path / "verdict.tsv"
    result = runner.invoke(main, ["ci", "k2pci", "--group", "Z4", "--set", "0,1", "--tsv", str(path)])
    assert result.exit_code == 0
    assert "result\ttrue\n" in path.read_text()


def test_ci_stabilizer_form(runner):
    result = runner.invoke(main, ["ci", "k2pci", "--group", "Z3", "--bcay", "0,1", "--stabilizer-form"])
    assert result.exit_code == 0
    assert "route=stabilizer" in result.output


def test_ci_bci3_three_way(runner):
    result = runner.invoke(main, ["ci", "bci3", "--group", "Z3", "--bcay", "0,1", "--three-way"])
    assert result.exit_code == 0
    assert "[PASS] three_way_agree" in result.output


def test_ci_vtx(runner):
    result = runner.invoke(main, ["ci", "vtx", "--group", "Z4", "--bcay", "0,1", "--expect", "true"])
    assert result.exit_code == 0


def test_ci_needs_a_set(runner, tmp_path):
    path = tmp_path / "z3.mcay"
    path.write_text("mcay m=2 n=3 group=Z3\nS 1 2 : 0\nS 2 1 : 0\n")
    result = runner.invoke(main, ["ci", "2pci", "--symbol", str(path)])
    assert result.exit_code == 1
    assert "ERROR" in result.output


# ---------------------------------------------------------------------------
# census
# ---------------------------------------------------------------------------


def test_census_orbits_json(runner):
    result = runner.invoke(main, ["census", "orbits", "--group", "Z4", "--sizes", "2", "--json", "-"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert [row["rep"] for row in data["orbits"]] == [["0", "1"], ["0", "2"]]


def test_census_orbits_bad_sizes(runner):
    result = runner.invoke(main, ["census", "orbits", "--group", "Z4", "--sizes", "two"])
    assert result.exit_code == 1


def test_census_classify_expectation(runner):
    args = ["census", "classify", "--group", "Z4xZ2"]
    assert runner.invoke(main, args + ["--expect", "N"]).exit_code == 0
    assert runner.invoke(main, args + ["--expect", "Y"]).exit_code == 2


def test_census_table1_small(runner):
    result = runner.invoke(main, ["census", "table1", "--max-order", "4"])
    assert result.exit_code == 0
    assert "checked=3" in result.output
    assert "all_match=true" in result.output


def test_census_registry_case(runner):
    result = runner.invoke(main, ["census", "registry", "Z8-not-2PCI"])
    assert result.exit_code == 0
    assert "[PASS] Z8-not-2PCI (Z8)" in result.output


def test_census_registry_unknown(runner):
    result = runner.invoke(main, ["census", "registry", "nothing"])
    assert result.exit_code == 1


def test_census_rank5_without_stretch(runner):
    result = runner.invoke(main, ["census", "rank5"])
    assert result.exit_code == 1
    assert "stretch" in result.output


# ---------------------------------------------------------------------------
# mcp
# ---------------------------------------------------------------------------


def test_mcp_group_prints_help(runner):
    result = runner.invoke(main, ["mcp"])
    assert result.exit_code == 0
    assert "list-tools" in result.output


def test_mcp_tool_groups_cover_expected_count():
    from cayleyiso._cli._mcp import EXPECTED_TOOLS, TOOL_GROUPS

    names = [n for group in TOOL_GROUPS.values() for n in group]
    assert len(set(names)) == EXPECTED_TOOLS == 6


# EOF

#!/usr/bin/env python3
"""Tests for cayleyiso.census: subset orbits, checkpoints, group classification
and the Z2^4 reduction."""

import math
import random

import pytest

from cayleyiso import BudgetExceededError, MalformedInputError, RunConfig
from cayleyiso.census import (
    RANK4_TAILS,
    action_group,
    apply_to_set,
    census_path,
    group_2pci_screen,
    iso_class_partition,
    k2pci_group_test,
    k_orbits_on_subsets,
    rank4_classes,
    rank5_census,
    load_table1,
    normal_form,
    read_census,
    schema_compatible,
    table1_report,
    two_pci_group_test,
    write_census,
)
from cayleyiso.ci import bcay_canonical, k2pci_graph_test
from cayleyiso.groups import named_group

# ---------------------------------------------------------------------------
# Subset orbits
# ---------------------------------------------------------------------------


def test_kernel_orbits_of_pairs(z4, config):
    index = k_orbits_on_subsets(z4, [2], config)
    assert [o.orbit_size for o in index.orbits] == [4, 2]
    assert index.accounted == 6
    assert index.representatives() == [frozenset({0, 1}), frozenset({0, 2})]
    assert index.orbit_of({1, 2}).representative == frozenset({0, 1})


def test_action_group_orders(z4, z8, config):
    assert action_group(z4, "k", config).order() == 8
    assert action_group(z4, "aut", config).order() == 2
    assert action_group(z8, "stabilizer", config).order() == 32


def test_admissibility_drops_empty_orbits(z4, config):
    index = k_orbits_on_subsets(z4, [2], config, action="aut", contains_identity=True, generates=True)
    assert len(index.orbits) == 1
    assert index.admissible_count == 2
    assert index.accounted == 6
    with pytest.raises(MalformedInputError):
        index.orbit_of({0, 2})


def test_predicate_is_recorded(z4, config):
    def symmetric(s):
        return all((-x) % 4 in s for x in s)

    index = k_orbits_on_subsets(z4, [2], config, action="aut", predicate=symmetric)
    assert index.constraints["predicate"] == "symmetric"
    assert index.representatives() == [frozenset({0, 2}), frozenset({1, 3})]


def test_census_budget(config):
    tight = RunConfig(census_budget=10)
    with pytest.raises(BudgetExceededError):
        k_orbits_on_subsets(named_group("Z8"), [4], tight)
    with pytest.raises(MalformedInputError):
        k_orbits_on_subsets(named_group("Z4"), [5], config)


@pytest.mark.parametrize(
    "spec, sizes, constrained",
    [("Z2^4", [3, 4, 5], True), ("Z2^4", [3, 4, 5], False), ("Z8", [3, 4], False), ("D8", [2, 3, 4], False)],
)
def test_minimizing_path_matches_direct(spec, sizes, constrained, config):
    g = named_group(spec)
    stretched = RunConfig(census_budget=50, stretch_z2_5=True)
    direct = k_orbits_on_subsets(g, sizes, config, contains_identity=constrained, generates=constrained)
    minimized = k_orbits_on_subsets(g, sizes, stretched, contains_identity=constrained, generates=constrained)
    assert (direct.path, minimized.path) == ("direct", "minimize")
    assert minimized.accounted == direct.accounted
    assert minimized.representatives() == direct.representatives()
    assert [o.orbit_size for o in minimized.orbits] == [o.orbit_size for o in direct.orbits]
    assert minimized.admissible_count is None


@pytest.mark.slow
def test_rank5_census_runs_one_size():
    g = named_group("Z2^5")
    stretched = RunConfig(census_budget=1000, stretch_z2_5=True)
    index = k_orbits_on_subsets(g, [7], stretched, contains_identity=True, generates=True)
    assert index.path == "minimize"
    assert index.action_order == 319_979_520
    assert index.accounted == math.comb(32, 7)
    assert all(g.identity in rep for rep in index.representatives())
    report = rank5_census(stretched, sizes=[7])
    assert report["path"] == "minimize"
    row = report["sizes"][0]
    assert row["orbits"] == len(index.orbits)
    assert 1 <= row["classes"] <= row["orbits"]


def test_iso_class_partition(z4, config):
    classes = iso_class_partition(z4, [{0, 1}, {0, 2}, {1, 2}], config)
    assert classes == [[frozenset({0, 1}), frozenset({1, 2})], [frozenset({0, 2})]]


@pytest.mark.parametrize("spec, sizes", [("Z4xZ2", [2, 3]), ("D8", [2, 3]), ("S3", [2, 3])])
def test_kernel_images_share_the_canonical_form(spec, sizes, config):
    g = named_group(spec)
    rng = random.Random(config.seed)
    kernel = action_group(g, "k", config)
    for rep in k_orbits_on_subsets(g, sizes, config).representatives():
        expected = bcay_canonical(g, rep, config)
        for _ in range(20):
            image = apply_to_set(kernel.random_element(rng), rep)
            assert bcay_canonical(g, image, config) == expected


def test_index_json(z4, config):
    data = k_orbits_on_subsets(z4, [1, 2], config).to_json()
    assert data["sizes"] == [1, 2]
    assert data["orbits"][0] == {"rep": ["0"], "orbit_size": 4, "stabilizer_order": 2, "admissible": 4}


# ---------------------------------------------------------------------------
# Checkpoints
# ---------------------------------------------------------------------------


def test_checkpoint_round_trip(tmp_path):
    path = census_path(tmp_path, "Z2^4", 3)
    assert path.name == "Z2_4_k3.census"
    rows = [(["0", "1"], 4, "ab12"), ([], 1, "00")]
    write_census(path, "Z2^4", 3, rows)
    assert read_census(path, "Z2^4", 3) == rows
    with pytest.raises(MalformedInputError):
        read_census(path, "Z2^4", 4)


def test_missing_or_foreign_checkpoint(tmp_path):
    assert read_census(tmp_path / "none.census", "Z4", 1) is None
    old = tmp_path / "old.census"
    old.write_text("# schema=2.0 group=Z4 size=1\n")
    assert read_census(old, "Z4", 1) is None


@pytest.mark.parametrize("found, ok", [("1.0", True), ("1.7", True), ("2.0", False), ("x", False)])
def test_schema_compatible(found, ok):
    assert schema_compatible(found) is ok


# ---------------------------------------------------------------------------
# Whole-group classification
# ---------------------------------------------------------------------------


def test_k2pci_group_test(z4, z4xz2, config, tmp_path):
    assert k2pci_group_test(z4, config, tmp_path).result
    assert census_path(tmp_path, "Z4", 2).exists()
    assert k2pci_group_test(z4, config, tmp_path).result
    verdict = k2pci_group_test(z4xz2, config)
    assert not verdict
    assert verdict.certificate["kind"] == "isomorphic_orbits"


@pytest.mark.parametrize("spec", ["Z3", "Z4", "Z2^2", "Z4xZ2"])
def test_group_verdict_implies_graph_verdicts(spec, config):
    g = named_group(spec)
    whole = k2pci_group_test(g, config).result
    rng = random.Random(config.seed)
    for _ in range(20):
        s = frozenset(rng.sample(range(g.order), rng.randint(1, g.order - 1)))
        assert k2pci_graph_test(g, s, config).result or not whole


def test_two_pci_group_test(config):
    assert two_pci_group_test(named_group("Z5"), config).result
    assert not two_pci_group_test(named_group("Z8"), config).result


def test_table1_small_orders(config):
    report = table1_report(max_order=8, config=config)
    assert report["all_match"], report["mismatches"]
    assert report["checked"] == 11
    assert report["rows"][-1]["skipped"]


def test_table1_entries():
    entries = load_table1()
    assert len(entries) == 22
    assert [e["group"] for e in entries if e.get("stretch")] == ["Z2^5"]


def test_screen_eliminates_z8(z8, config):
    report = group_2pci_screen(z8, config)
    assert "sylow_condition" in report["eliminated_by"]
    assert report["exhaustive"] is None


def test_screen_runs_census(config):
    report = group_2pci_screen(named_group("Z3"), config)
    assert report["eliminated_by"] == []
    assert report["conditions"]["solvable"]["pass"]
    assert report["exhaustive"]["result"]


@pytest.mark.slow
def test_screen_eliminates_nonsolvable_a5(config):
    report = group_2pci_screen(named_group("A5"), config)
    assert not report["solvable"]
    assert "solvable" in report["eliminated_by"]
    assert report["exhaustive"] is None


# ---------------------------------------------------------------------------
# Z2^4 reduction
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "words, expected",
    [
        (["Id", "a", "b", "c", "d", "ab"], ("cd",)),
        (["Id", "a", "b", "c", "d", "abc"], ("bcd",)),
    ],
)
def test_normal_form(z2_4, words, expected):
    s = {z2_4.parse_element(w) for w in words}
    alpha, extension = normal_form(z2_4, s)
    assert extension == expected
    assert alpha.is_homomorphism()


def test_rank4_tails_has_twelve_entries():
    assert len(RANK4_TAILS) == 12
    assert len(set(RANK4_TAILS)) == 12


def test_rank5_census_needs_stretch(config):
    with pytest.raises(BudgetExceededError):
        rank5_census(config)


@pytest.mark.slow
def test_rank4_classes(config):
    report = rank4_classes(config, check_semiregular=True)
    assert report["class_count"] == 12
    assert report["tails_matched"]
    assert report["all_single_class"]


# EOF

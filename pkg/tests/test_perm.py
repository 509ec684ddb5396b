#!/usr/bin/env python3
"""Tests for cayleyiso.perm: permutations, Schreier-Sims, conjugacy."""

import pytest

from cayleyiso import MalformedInputError, SubgroupNotContainedError
from cayleyiso.perm import (
    Permutation,
    PermGroup,
    UnionFind,
    conjugating_element,
    find_orbits,
    parse_cycles,
    point_orbits,
)

# ---------------------------------------------------------------------------
# Permutation
# ---------------------------------------------------------------------------


def test_product_applies_left_factor_first():
    a = parse_cycles("(0 1)", 3)
    b = parse_cycles("(1 2)", 3)
    assert (a * b).images == (2, 0, 1)
    assert (b * a).images == (1, 2, 0)


def test_parse_compact_one_based_cycles():
    p = parse_cycles("(13245)", 5, offset=1)
    assert p.images == (2, 3, 1, 4, 0)
    assert p.cycle_string(offset=1, sep="") == "(13245)"
    assert p.order() == 5


@pytest.mark.parametrize("text", ["()", "e", "Id", "1", ""])
def test_identity_spellings(text):
    assert parse_cycles(text, 4).is_identity()


def test_parse_rejects_stray_text():
    with pytest.raises(MalformedInputError):
        parse_cycles("(0 1) x", 3)


def test_not_a_permutation():
    with pytest.raises(MalformedInputError):
        Permutation([0, 0, 1])


def test_inverse_power_and_conjugation():
    p = parse_cycles("(0 1 2 3)", 4)
    assert (p * p.inverse()).is_identity()
    assert p**4 == Permutation.identity(4)
    assert p**-1 == p.inverse()
    x = parse_cycles("(0 1)", 4)
    assert p**x == x.inverse() * p * x


def test_cycle_structure():
    p = parse_cycles("(0 1)(2 3 4)", 6)
    assert p.cycle_type() == (1, 2, 3)
    assert p.fixed_points() == [5]
    assert p.support() == [0, 1, 2, 3, 4]
    assert not p.is_uniform(2)
    assert parse_cycles("(0 1)(2 3)", 4).is_uniform(2)


def test_json_round_trip():
    p = parse_cycles("(0 2)(1 3)", 5)
    assert Permutation.from_json(p.to_json()) == p


# ---------------------------------------------------------------------------
# PermGroup
# ---------------------------------------------------------------------------


def test_symmetric_group_order():
    g = PermGroup([parse_cycles("(0 1 2 3)", 4), parse_cycles("(0 1)", 4)])
    assert g.order() == 24
    assert g.is_transitive()
    assert parse_cycles("(1 3)", 4) in g


def test_membership_and_subgroups():
    klein = PermGroup([parse_cycles("(0 1)(2 3)", 4), parse_cycles("(0 2)(1 3)", 4)])
    assert klein.order() == 4
    assert parse_cycles("(0 3)(1 2)", 4) in klein
    assert parse_cycles("(0 1)", 4) not in klein
    assert klein.is_semiregular() == (True, 1)
    assert len(klein.elements()) == 4


def test_semiregular_with_two_orbits():
    h = PermGroup([parse_cycles("(0 1)(2 3)", 4)])
    assert h.is_semiregular() == (True, 2)
    assert not PermGroup([parse_cycles("(0 1)", 4)]).is_semiregular()[0]


def test_stabilizer_order():
    s4 = PermGroup([parse_cycles("(0 1 2 3)", 4), parse_cycles("(0 1)", 4)])
    assert s4.stabilizer(0).order() == 6
    assert s4.pointwise_stabilizer([0, 1]).order() == 2


def test_empty_generators_need_degree():
    assert PermGroup([], degree=3).order() == 1
    with pytest.raises(MalformedInputError):
        PermGroup([])


def test_random_element_is_seeded():
    import random

    s4 = PermGroup([parse_cycles("(0 1 2 3)", 4), parse_cycles("(0 1)", 4)])
    first = [s4.random_element(random.Random(7)) for _ in range(3)]
    again = [s4.random_element(random.Random(7)) for _ in range(3)]
    assert first == again
    assert all(p in s4 for p in first)


def test_element_cap():
    from cayleyiso import BudgetExceededError

    s4 = PermGroup([parse_cycles("(0 1 2 3)", 4), parse_cycles("(0 1)", 4)])
    with pytest.raises(BudgetExceededError):
        s4.elements(cap=10)


# ---------------------------------------------------------------------------
# Conjugacy
# ---------------------------------------------------------------------------


def test_conjugating_element_found():
    s3 = PermGroup([parse_cycles("(0 1 2)", 3), parse_cycles("(0 1)", 3)])
    h1 = PermGroup([parse_cycles("(0 1)", 3)])
    h2 = PermGroup([parse_cycles("(1 2)", 3)])
    x = conjugating_element(s3, h1, h2)
    assert x is not None
    assert parse_cycles("(0 1)", 3) ** x == parse_cycles("(1 2)", 3)


def test_conjugating_element_absent_in_abelian_ambient():
    ambient = PermGroup([parse_cycles("(0 1)", 4), parse_cycles("(2 3)", 4)])
    h1 = PermGroup([parse_cycles("(0 1)", 4)])
    h2 = PermGroup([parse_cycles("(2 3)", 4)])
    assert conjugating_element(ambient, h1, h2) is None


def test_conjugating_element_requires_containment():
    ambient = PermGroup([parse_cycles("(0 1)", 3)])
    outside = PermGroup([parse_cycles("(1 2)", 3)])
    with pytest.raises(SubgroupNotContainedError):
        conjugating_element(ambient, ambient, outside)


# ---------------------------------------------------------------------------
# Orbit helpers
# ---------------------------------------------------------------------------


def test_union_find_blocks():
    uf = UnionFind(range(5))
    uf.union(0, 3)
    uf.union(4, 3)
    assert uf.same(0, 4)
    assert uf.blocks() == [[0, 3, 4], [1], [2]]


def test_point_and_generic_orbits():
    gens = [parse_cycles("(0 1)", 4)]
    assert point_orbits(gens, 4) == [[0, 1], [2], [3]]
    assert find_orbits([1], range(6), lambda g, x: (x + 2 * g) % 6) == [[0, 2, 4], [1, 3, 5]]


# EOF

#!/usr/bin/env python3
"""Tests for cayleyiso.groups: named groups, automorphisms, subgroups, predicates."""

import pytest

from cayleyiso import GroupSpecError, MalformedInputError, NotNormalError
from cayleyiso.groups import (
    FiniteGroup,
    GroupMap,
    Subgroup,
    all_subgroups,
    automorphism_count,
    automorphism_generators,
    automorphism_group,
    automorphism_permgroup,
    characteristic_subgroups,
    commutator_subgroup,
    cyclic_subgroups,
    derived_series,
    describe_group,
    elementary_abelian_rank,
    extends_to_automorphism,
    fif_failure,
    gl_order,
    group_isomorphic,
    index2_subgroups_equivalent,
    is_cyclic,
    is_fif_group,
    is_homogeneous,
    is_iso_group,
    is_solvable,
    named_group,
    normal_subgroups,
    quotient_group,
    same_order_subgroups_aut_equivalent,
    sylow_condition_2pci,
    sylow_subgroup,
)

# ---------------------------------------------------------------------------
# Construction and parsing
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "spec, order",
    [
        ("1", 1),
        ("Z8", 8),
        ("Z2^4", 16),
        ("Z4xZ2", 8),
        ("D8", 8),
        ("Dic12", 12),
        ("Q8", 8),
        ("Q8xZ2", 16),
        ("A4", 12),
        ("A5", 60),
        ("S3", 6),
        ("F8", 56),
        ("G18", 18),
        ("Z3^3", 27),
    ],
)
def test_named_group_orders(spec, order):
    assert named_group(spec).order == order


@pytest.mark.parametrize("spec", ["", "Foo", "D7", "Dic10", "A9"])
def test_bad_specs(spec):
    with pytest.raises(GroupSpecError):
        named_group(spec)


def test_multiplication_table_is_validated():
    with pytest.raises(MalformedInputError):
        FiniteGroup([[0, 1], [0, 1]], ["a", "b"])


def test_cyclic_words(z8):
    assert z8.label(z8.parse_element("x^-1")) == "7"
    assert z8.label(z8.parse_element("x^3")) == "3"
    assert z8.parse_element("Id") == z8.identity
    assert z8.set_labels(z8.parse_set("0, 1,2,5")) == ["0", "1", "2", "5"]


def test_large_cyclic_words():
    g = named_group("Z27")
    assert g.label(g.parse_element("x^11")) == "11"
    assert g.label(g.parse_element("x^-7")) == "20"


def test_identity_aliases_and_named_basis():
    z2_4 = named_group("Z2^4")
    assert z2_4.parse_element("e") == z2_4.identity
    assert z2_4.label(z2_4.parse_element("ac")) == "1.0.1.0"
    z2_5 = named_group("Z2^5")
    assert z2_5.label(z2_5.parse_element("e")) == "0.0.0.0.1"
    assert z2_5.parse_element("Id") == z2_5.identity


def test_permutation_labels_accept_any_cycle_spelling():
    a5 = named_group("A5")
    x = a5.parse_element("(13245)")
    assert a5.parse_element("(32451)") == x
    assert a5.element_order(x) == 5
    with pytest.raises(MalformedInputError):
        a5.parse_element("(12)")


def test_nonabelian_words():
    dic = named_group("Dic12")
    x, y = dic.parse_element("x"), dic.parse_element("y")
    assert dic.element_order(x) == 6
    assert dic.mul(y, y) == dic.power(x, 3)
    assert dic.parse_element("y^-1xy") == dic.inv(x)
    g18 = named_group("G18")
    assert g18.parse_element("e1x") == g18.mul(g18.parse_element("e1"), g18.parse_element("x"))


def test_unknown_element(z4):
    with pytest.raises(MalformedInputError):
        z4.parse_element("y")


# ---------------------------------------------------------------------------
# Automorphisms
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "spec, count",
    [("Z4", 2), ("Z7", 6), ("Z2^2", 6), ("Z2^3", 168), ("Z4xZ2", 8), ("D8", 8), ("Q8", 24), ("S3", 6), ("A4", 24)],
)
def test_automorphism_counts(spec, count, config):
    assert automorphism_count(named_group(spec), config) == count


def test_gl_order_and_rank():
    assert gl_order(4, 2) == 20160
    assert gl_order(2, 3) == 48
    assert elementary_abelian_rank(named_group("Z3^2")) == (3, 2)
    assert elementary_abelian_rank(named_group("Z4")) is None


def test_automorphism_generators_are_automorphisms(z4xz2, config):
    for alpha in automorphism_generators(z4xz2, config):
        assert alpha.is_bijective()
        assert alpha.is_homomorphism()


def test_group_isomorphic():
    assert group_isomorphic(named_group("Z2xZ3"), named_group("Z6")) is not None
    assert group_isomorphic(named_group("Q8"), named_group("D8")) is None


def test_extends_to_automorphism(z4, config):
    swap = GroupMap(z4, z4, (0, 3, 2, 1))
    assert swap.is_homomorphism()
    auts = automorphism_group(z4, config)
    assert extends_to_automorphism(z4, {1: 3}, auts)
    assert not extends_to_automorphism(z4, {1: 2}, auts)


# ---------------------------------------------------------------------------
# Subgroups
# ---------------------------------------------------------------------------


def test_subgroup_lattice(config):
    assert len(all_subgroups(named_group("Z2^2"), config)) == 5
    assert len(normal_subgroups(named_group("S3"), config)) == 3
    assert len(cyclic_subgroups(named_group("Z4"))) == 3


def test_characteristic_subgroups(z4xz2, config):
    chars = characteristic_subgroups(z4xz2, automorphism_generators(z4xz2, config), config)
    squares = Subgroup.generated_by(z4xz2, [z4xz2.parse_element("2.0")])
    assert squares in chars
    assert Subgroup.generated_by(z4xz2, [z4xz2.parse_element("0.1")]) not in chars


def test_quotient_group(z4):
    h = Subgroup.generated_by(z4, [2])
    quotient, projection = quotient_group(z4, h)
    assert quotient.order == 2
    assert projection.is_homomorphism()
    assert [projection(x) for x in range(4)] == [0, 1, 0, 1]


def test_quotient_requires_normal():
    s3 = named_group("S3")
    h = Subgroup.generated_by(s3, [s3.parse_element("(12)")])
    with pytest.raises(NotNormalError):
        quotient_group(s3, h)


def test_solvability_and_derived_subgroup():
    a4 = named_group("A4")
    assert len(commutator_subgroup(a4)) == 4
    assert is_solvable(a4)
    assert not is_solvable(named_group("A5"))


def test_derived_series():
    assert [h.order for h in derived_series(named_group("S4"))] == [24, 12, 4, 1]
    assert len(derived_series(named_group("A5"))) == 1


def test_automorphism_permgroup_and_table_export(config):
    assert automorphism_permgroup(named_group("Z8"), config).order() == 4
    data = named_group("Z3").to_json()
    assert data["table"] == [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
    assert data["labels"] == ["0", "1", "2"]


def test_sylow_subgroups():
    assert sylow_subgroup(named_group("A4"), 2).order == 4
    assert sylow_subgroup(named_group("A5"), 5).order == 5


def test_subgroup_from_members_validates(z4):
    with pytest.raises(MalformedInputError):
        Subgroup.from_members(z4, [0, 1])


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "spec, text",
    [
        ("1", "1"),
        ("Z6", "Z6"),
        ("Z2xZ3", "Z6"),
        ("Z2^3", "Z2^3"),
        ("Q8", "Q8"),
        ("Z4xZ2", "abelian of order 8, exponent 4"),
        ("D8", "nonabelian of order 8, exponent 4"),
    ],
)
def test_describe_group(spec, text):
    assert describe_group(named_group(spec)) == text


def test_is_cyclic():
    assert is_cyclic(named_group("Z3xZ4"))
    assert not is_cyclic(named_group("Z2^2"))


def test_subgroup_equivalence(z4xz2, config):
    ok, certificate = same_order_subgroups_aut_equivalent(z4xz2, config)
    assert not ok
    assert "pair" in certificate
    assert same_order_subgroups_aut_equivalent(named_group("Z2^3"), config)[0]


def test_index2_subgroups(config):
    assert index2_subgroups_equivalent(named_group("Z4"), config)
    assert index2_subgroups_equivalent(named_group("Z2^2"), config)
    assert not index2_subgroups_equivalent(named_group("Z4xZ2"), config)


def test_iso_groups(config):
    assert is_iso_group(named_group("Q8"), config)
    assert not is_iso_group(named_group("Z4xZ2"), config)


def test_fif_groups(z4xz2, config):
    assert is_fif_group(named_group("Z2^3"), config)
    assert is_fif_group(named_group("Z4"), config)
    x, y = fif_failure(z4xz2, config)
    assert z4xz2.element_order(x) == z4xz2.element_order(y)


def test_homogeneous(config):
    assert is_homogeneous(named_group("Z2^3"), config)
    assert not is_homogeneous(named_group("Z4xZ2"), config)


@pytest.mark.parametrize(
    "spec, ok, failed",
    [
        ("Z9", True, []),
        ("Z3^2", True, []),
        ("Z27", False, [3]),
        ("Z4", True, []),
        ("Q8", True, []),
        ("Z8", False, [2]),
        ("D8", False, [2]),
        ("Z2^3xZ5", True, []),
    ],
)
def test_sylow_condition(spec, ok, failed):
    result, report = sylow_condition_2pci(named_group(spec))
    assert result is ok
    assert report["failed_primes"] == failed


# EOF

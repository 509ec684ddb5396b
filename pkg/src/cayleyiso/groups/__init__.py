#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/groups/__init__.py
"""Finite groups as multiplication tables: constructors, automorphisms,
subgroups, quotients and the 2PCI screening predicates."""

from ._automorphisms import (
    automorphism_count,
    automorphism_generators,
    automorphism_group,
    automorphism_permgroup,
    elementary_abelian_rank,
    extends_to_automorphism,
    gl_order,
    group_isomorphic,
)
from ._finite_group import IDENTITY_ALIASES, FiniteGroup, GroupMap, Subgroup
from ._named import (
    abelian,
    alternating,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    frobenius_56,
    generalized_dihedral_18,
    named_group,
    quaternion,
    symmetric,
    trivial,
)
from ._predicates import (
    describe_group,
    fif_failure,
    index2_subgroups_equivalent,
    is_cyclic,
    is_elementary_abelian,
    is_fif_group,
    is_homogeneous,
    is_iso_group,
    same_order_subgroups_aut_equivalent,
    sylow_condition_2pci,
)
from ._subgroups import (
    all_subgroups,
    characteristic_subgroups,
    commutator_subgroup,
    cyclic_subgroups,
    derived_series,
    is_solvable,
    normal_subgroups,
    preimage,
    prime_divisors,
    quotient_group,
    subgroups_of_order,
    sylow_subgroup,
)

__all__ = [
    # types
    "FiniteGroup",
    "GroupMap",
    "Subgroup",
    "IDENTITY_ALIASES",
    # constructors
    "named_group",
    "abelian",
    "cyclic",
    "dihedral",
    "dicyclic",
    "quaternion",
    "generalized_dihedral_18",
    "symmetric",
    "alternating",
    "frobenius_56",
    "trivial",
    "direct_product",
    # automorphisms
    "automorphism_group",
    "automorphism_generators",
    "automorphism_permgroup",
    "automorphism_count",
    "group_isomorphic",
    "extends_to_automorphism",
    "elementary_abelian_rank",
    "gl_order",
    # subgroups
    "all_subgroups",
    "cyclic_subgroups",
    "subgroups_of_order",
    "normal_subgroups",
    "characteristic_subgroups",
    "quotient_group",
    "preimage",
    "commutator_subgroup",
    "derived_series",
    "is_solvable",
    "sylow_subgroup",
    "prime_divisors",
    # predicates
    "is_cyclic",
    "is_elementary_abelian",
    "describe_group",
    "same_order_subgroups_aut_equivalent",
    "index2_subgroups_equivalent",
    "is_iso_group",
    "fif_failure",
    "is_fif_group",
    "is_homogeneous",
    "sylow_condition_2pci",
]

#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/census/__init__.py
"""Connection-set census: kernel orbits, whole-group classification, the
table of exceptional groups, the Z2^n reduction and the registry of
explicit examples."""

from ._classify import (
    TABLE1_FILE,
    group_2pci_screen,
    k2pci_group_test,
    load_table1,
    table1_column,
    table1_report,
    two_pci_group_test,
)
from ._elementary import RANK4_TAILS, rank4_classes, rank5_census, normal_form
from ._orbits import (
    ACTIONS,
    SubsetOrbit,
    SubsetOrbitIndex,
    action_group,
    action_permutations,
    apply_to_set,
    iso_class_partition,
    k_orbits_on_subsets,
)
from ._persist import CENSUS_SCHEMA, census_path, read_census, schema_compatible, write_census
from ._registry import (
    CHECKS,
    REGISTRY_FILE,
    RegistryCase,
    load_registry,
    registry_case,
    symbol_from_json,
    kmci_witnesses,
    verify_all,
    verify_registry_case,
)

__all__ = [
    # orbits
    "ACTIONS",
    "SubsetOrbit",
    "SubsetOrbitIndex",
    "action_permutations",
    "action_group",
    "apply_to_set",
    "k_orbits_on_subsets",
    "iso_class_partition",
    # persistence
    "CENSUS_SCHEMA",
    "census_path",
    "read_census",
    "write_census",
    "schema_compatible",
    # classification
    "k2pci_group_test",
    "two_pci_group_test",
    "group_2pci_screen",
    "TABLE1_FILE",
    "load_table1",
    "table1_column",
    "table1_report",
    # elementary abelian reduction
    "RANK4_TAILS",
    "normal_form",
    "rank4_classes",
    "rank5_census",
    # registry
    "REGISTRY_FILE",
    "CHECKS",
    "RegistryCase",
    "symbol_from_json",
    "load_registry",
    "registry_case",
    "verify_registry_case",
    "verify_all",
    "kmci_witnesses",
]

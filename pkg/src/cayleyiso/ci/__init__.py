#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/ci/__init__.py
"""Decision procedures for Cayley isomorphism properties of m-Cayley and
bi-Cayley digraphs."""

from ._bci import (
    bcay_canonical,
    bci_condition3,
    family_witness,
    fif_witness_sets,
    index2_complete_bipartite,
    witness_to_json,
)
from ._criteria import (
    EXHAUSTIVE_SUBSET_BOUND,
    ROUTES,
    bci3_verdict,
    is_vertex_transitive,
    k2pci_graph_test,
    kmci_test,
    kmpci_test,
    stabilizer_form_k2pci,
    three_way_bci_check,
    two_pci_graph_test,
)
from ._normalizer_in_aut import (
    induced_on_parts,
    induces_full_symmetric,
    normalizer_elements,
    normalizer_in_aut,
)
from ._semiregular import (
    SemiregularClass,
    SemiregularReport,
    semiregular_search,
    semiregular_subgroups,
    span_images,
    validate_witness,
)
from ._verdict import PROPERTIES, CiVerdict

__all__ = [
    # verdicts
    "CiVerdict",
    "PROPERTIES",
    # normalizer
    "normalizer_elements",
    "normalizer_in_aut",
    "induced_on_parts",
    "induces_full_symmetric",
    # semiregular subgroups
    "SemiregularClass",
    "SemiregularReport",
    "semiregular_search",
    "semiregular_subgroups",
    "validate_witness",
    "span_images",
    # criteria
    "ROUTES",
    "EXHAUSTIVE_SUBSET_BOUND",
    "kmci_test",
    "kmpci_test",
    "is_vertex_transitive",
    "two_pci_graph_test",
    "k2pci_graph_test",
    "stabilizer_form_k2pci",
    "bci3_verdict",
    "three_way_bci_check",
    # connection sets
    "bcay_canonical",
    "bci_condition3",
    "family_witness",
    "witness_to_json",
    "fif_witness_sets",
    "index2_complete_bipartite",
]

#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/mcayley/__init__.py
"""m-Cayley and bi-Cayley digraphs, the normalizer of R(G), and symbol
transformations."""

from ._bcay import build_bcay, is_connected_bcay, normalize_connection_set, quotient_bcay
from ._digraph import (
    MCayleyDigraph,
    bipartite_complement,
    build_mcayley,
    digraph_to_json,
    lexicographic_blowup,
    right_regular,
    right_translation,
)
from ._normalizer import (
    NormalizerElement,
    apply_normalizer,
    automorphism_element,
    check_symbol_images,
    inversion_swap,
    left_translation,
    normalizer_and_kernel,
    part_permutation,
    random_normalizer_elements,
)
from ._symbol import (
    ConnectionSymbol,
    bcay_symbol,
    pad_symbol,
    symbol_from_text,
    symbol_to_text,
)

__all__ = [
    # symbols
    "ConnectionSymbol",
    "bcay_symbol",
    "pad_symbol",
    "symbol_to_text",
    "symbol_from_text",
    # digraphs
    "MCayleyDigraph",
    "build_mcayley",
    "build_bcay",
    "digraph_to_json",
    "right_translation",
    "right_regular",
    "bipartite_complement",
    "lexicographic_blowup",
    # normalizer
    "NormalizerElement",
    "apply_normalizer",
    "left_translation",
    "automorphism_element",
    "part_permutation",
    "inversion_swap",
    "normalizer_and_kernel",
    "random_normalizer_elements",
    "check_symbol_images",
    # bi-Cayley
    "is_connected_bcay",
    "normalize_connection_set",
    "quotient_bcay",
]

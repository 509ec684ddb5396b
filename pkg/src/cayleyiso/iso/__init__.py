#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/iso/__init__.py
"""Automorphisms, canonical forms and isomorphisms of vertex-coloured
digraphs."""

from ._canonical import (
    CANON_VERSION,
    CanonicalForm,
    automorphisms,
    canonical,
    find_isomorphism,
    is_isomorphic,
)
from ._colored import MODES, VERTEX_BOUND, ColoredDigraph, check_mode, maps_colors
from ._refine import Refiner

__all__ = [
    # digraphs
    "ColoredDigraph",
    "MODES",
    "VERTEX_BOUND",
    "check_mode",
    "maps_colors",
    # search
    "CanonicalForm",
    "CANON_VERSION",
    "canonical",
    "automorphisms",
    "find_isomorphism",
    "is_isomorphic",
    "Refiner",
]

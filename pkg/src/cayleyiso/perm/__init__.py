#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/perm/__init__.py
"""Permutations and permutation groups: chains, orbits, conjugacy search."""

from ._conjugacy import conjugating_element
from ._group import (
    PermGroup,
    enumerate_elements,
    group_from_generators,
    is_semiregular,
    orbits,
)
from ._orbits import UnionFind, find_orbits, point_orbits
from ._permutation import Permutation, parse_cycles

__all__ = [
    # permutations
    "Permutation",
    "parse_cycles",
    # groups
    "PermGroup",
    "group_from_generators",
    "enumerate_elements",
    "orbits",
    "is_semiregular",
    # conjugacy
    "conjugating_element",
    # orbit helpers
    "UnionFind",
    "find_orbits",
    "point_orbits",
]

#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/iso/_colored.py
"""Vertex-coloured digraphs and the two colour modes.

``fixed``: isomorphisms preserve every colour class.
``permutable``: isomorphisms may permute colour classes among each other.
The permutable mode is reduced to the fixed one by adding one marker
vertex per class, with arcs from the marker to each class member.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .._errors import BudgetExceededError, MalformedInputError
from ..perm import Permutation

VERTEX_BOUND = 256
MODES = ("fixed", "permutable")


def check_mode(mode: str) -> str:
    if mode not in MODES:
        raise MalformedInputError(f"unknown colour mode {mode!r}; expected one of {MODES}")
    return mode


@dataclass(frozen=True)
class ColoredDigraph:
    adjacency: np.ndarray = field(repr=False, compare=False)
    colors: np.ndarray = field(repr=False, compare=False)

    def __post_init__(self):
        adj = np.asarray(self.adjacency, dtype=bool)
        colors = np.asarray(self.colors, dtype=np.int64)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise MalformedInputError("adjacency must be square")
        if colors.shape != (adj.shape[0],):
            raise MalformedInputError("one colour per vertex is required")
        object.__setattr__(self, "adjacency", adj)
        object.__setattr__(self, "colors", colors)

    @classmethod
    def from_adjacency(cls, adjacency, colors=None) -> ColoredDigraph:
        adjacency = np.asarray(adjacency, dtype=bool)
        if colors is None:
            colors = np.zeros(adjacency.shape[0], dtype=np.int64)
        return cls(adjacency, colors)

    @classmethod
    def from_mcayley(cls, d) -> ColoredDigraph:
        """Colour every vertex of an m-Cayley digraph by its part."""
        return cls(d.adjacency, d.colors())

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    def relabel(self, perm: Permutation) -> ColoredDigraph:
        """Image under ``v -> perm(v)``."""
        p = np.asarray(perm.images)
        adj = np.zeros_like(self.adjacency)
        adj[np.ix_(p, p)] = self.adjacency
        colors = np.empty_like(self.colors)
        colors[p] = self.colors
        return ColoredDigraph(adj, colors)

    def preserved_by(self, perm: Permutation, mode: str) -> bool:
        """Whether ``perm`` is an automorphism respecting ``mode``."""
        p = np.asarray(perm.images)
        if not np.array_equal(self.adjacency[np.ix_(p, p)], self.adjacency):
            return False
        return maps_colors(self.colors, self.colors, p, mode)

    def augmented(self, mode: str) -> tuple[np.ndarray, np.ndarray]:
        """Adjacency and colours of the fixed-mode graph searched for ``mode``.

        Raises
        ------
        BudgetExceededError
            Above the vertex bound.
        """
        check_mode(mode)
        if self.n > VERTEX_BOUND:
            raise BudgetExceededError("digraph vertex bound", VERTEX_BOUND, self.n)
        if mode == "fixed":
            return self.adjacency, self.colors
        classes = np.unique(self.colors)
        k = len(classes)
        adj = np.zeros((self.n + k, self.n + k), dtype=bool)
        adj[: self.n, : self.n] = self.adjacency
        for c, value in enumerate(classes):
            adj[self.n + c, : self.n] = self.colors == value
        colors = np.concatenate([np.zeros(self.n, dtype=np.int64), np.ones(k, dtype=np.int64)])
        return adj, colors


def maps_colors(src: np.ndarray, dst: np.ndarray, images: np.ndarray, mode: str) -> bool:
    """``images`` sends the colour classes of ``src`` onto those of ``dst``
    (identically in fixed mode, bijectively in permutable mode)."""
    if mode == "fixed":
        return bool(np.array_equal(dst[images], src))
    pairs = set(zip(src.tolist(), dst[images].tolist()))
    forward = {a for a, _ in pairs}
    backward = {b for _, b in pairs}
    return len(pairs) == len(forward) == len(backward)


__all__ = ["ColoredDigraph", "VERTEX_BOUND", "MODES", "check_mode", "maps_colors"]

# EOF

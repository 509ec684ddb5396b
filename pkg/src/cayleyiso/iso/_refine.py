#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/iso/_refine.py
"""Colour refinement on ordered partitions, vectorised with numpy.

A partition is an int array ``cells`` with ``cells[v]`` the index of the
cell holding ``v``. Cell indices are ordered, and that order depends
only on the graph structure, never on vertex names.
"""

from __future__ import annotations

import numpy as np


class Refiner:
    """Equitable refinement by (cell, out-counts, in-counts) per vertex."""

    def __init__(self, adjacency: np.ndarray):
        self.adj = np.asarray(adjacency, dtype=np.float32)
        self.adj_t = np.ascontiguousarray(self.adj.T)
        self.n = self.adj.shape[0]
        self._rows = np.arange(self.n)

    def initial(self, colors: np.ndarray) -> np.ndarray:
        return np.unique(colors, return_inverse=True)[1].reshape(-1)

    def refine(self, cells: np.ndarray) -> tuple[np.ndarray, bytes]:
        """Refine until stable; return the partition and its invariant.

        The invariant encodes the cell sizes and the cell-to-cell arc
        counts of the equitable partition.
        """
        k = int(cells.max()) + 1
        while True:
            member = np.zeros((self.n, k), dtype=np.float32)
            member[self._rows, cells] = 1.0
            out = self.adj @ member
            inn = self.adj_t @ member
            key = np.concatenate([cells[:, None].astype(np.float32), out, inn], axis=1)
            new = np.unique(key, axis=0, return_inverse=True)[1].reshape(-1)
            k_new = int(new.max()) + 1
            if k_new == k:
                quotient = member.T @ out
                sizes = member.sum(axis=0)
                invariant = np.concatenate([sizes, quotient.ravel()]).astype(np.int64)
                return new, invariant.tobytes()
            cells, k = new, k_new

    def individualize(self, cells: np.ndarray, v: int) -> np.ndarray:
        """Split ``v`` off in front of the rest of its cell."""
        key = cells * 2 + (self._rows != v)
        return np.unique(key, return_inverse=True)[1].reshape(-1)

    @staticmethod
    def target_cell(cells: np.ndarray) -> int | None:
        """First smallest non-singleton cell, or None when discrete."""
        sizes = np.bincount(cells)
        multi = np.nonzero(sizes > 1)[0]
        if len(multi) == 0:
            return None
        return int(multi[np.argmin(sizes[multi])])


__all__ = ["Refiner"]

# EOF

#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/perm/_orbits.py
"""Union-find and orbit partitions of generic group actions."""

from __future__ import annotations

from collections.abc import Callable, Hashable, Iterable


class UnionFind:
    """Disjoint sets over an explicit, hashable universe."""

    def __init__(self, universe: Iterable[Hashable]):
        self.parent = {x: x for x in universe}
        self.rank = {x: 0 for x in self.parent}
        self.size = {x: 1 for x in self.parent}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        self.size[x] += self.size[y]
        return True

    def same(self, x, y) -> bool:
        return self.find(x) == self.find(y)

    def blocks(self) -> list[list]:
        """Blocks with sorted members, ordered by least member."""
        groups: dict = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return sorted((sorted(b) for b in groups.values()), key=lambda b: b[0])


def find_orbits(gens, space, action: Callable) -> list[list]:
    """Orbits of the group generated by ``gens`` acting on ``space``.

    ``action(g, x)`` must return the image of ``x`` under ``g``; images
    must lie in ``space``.
    """
    space = list(space)
    uf = UnionFind(space)
    for g in gens:
        for x in space:
            uf.union(x, action(g, x))
    return uf.blocks()


def point_orbits(gens, degree: int) -> list[list[int]]:
    """Orbits on ``range(degree)`` of permutations given by image tuples."""
    uf = UnionFind(range(degree))
    for g in gens:
        img = g.images if hasattr(g, "images") else g
        for x in range(degree):
            uf.union(x, img[x])
    return uf.blocks()


__all__ = ["UnionFind", "find_orbits", "point_orbits"]

# EOF

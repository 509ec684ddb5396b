#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/iso/_canonical.py
"""Canonical labelling, automorphism groups and isomorphism of coloured
digraphs by individualization-refinement.

The search tree is explored depth first. The first leaf and the best
leaf (least key) are kept; a leaf with the key of either one yields an
automorphism. Children in one orbit of the automorphisms found so far
that fix the current prefix are explored once.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .._config import RunConfig, resolve
from .._errors import BudgetExceededError, InvariantViolation
from ..perm import Permutation, PermGroup
from ._colored import ColoredDigraph, check_mode, maps_colors
from ._refine import Refiner

logger = logging.getLogger(__name__)

CANON_VERSION = 1


@dataclass(frozen=True)
class CanonicalForm:
    """Result of the canonical labelling search.

    ``labeling[v]`` is the canonical position of vertex ``v``;
    ``canonical_bytes`` is equal for two digraphs iff they are isomorphic
    in the same colour mode.
    """

    labeling: Permutation
    canonical_bytes: bytes = field(repr=False)
    generators: tuple = field(repr=False)
    mode: str = "fixed"
    nodes: int = 0

    def hex(self) -> str:
        return self.canonical_bytes.hex()


class _Search:
    def __init__(self, adjacency: np.ndarray, colors: np.ndarray, budget: int):
        self.adj = adjacency
        self.colors = colors
        self.n = adjacency.shape[0]
        self.refiner = Refiner(adjacency)
        self.budget = budget
        self.nodes = 0
        self.generators: list[np.ndarray] = []
        self.first = None
        self.best = None

    def run(self) -> None:
        cells, inv = self.refiner.refine(self.refiner.initial(self.colors))
        self._visit(cells, [inv], [])

    # ------------------------------------------------------------------

    def _could_match(self, invs: list) -> bool:
        depth = len(invs)
        path = tuple(invs)
        if path == self.first[0][0][:depth]:
            return True
        return path <= self.best[0][0][:depth]

    def _orbit_min(self, prefix: list, v: int) -> int:
        gens = [g for g in self.generators if all(g[p] == p for p in prefix)]
        if not gens:
            return v
        seen = {v}
        queue = [v]
        for x in queue:
            for g in gens:
                y = int(g[x])
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return min(seen)

    def _visit(self, cells: np.ndarray, invs: list, prefix: list) -> int | None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError("canonical labelling search nodes", self.budget, self.nodes)
        if self.first is not None and not self._could_match(invs):
            return None
        target = self.refiner.target_cell(cells)
        if target is None:
            return self._leaf(cells, invs, prefix)
        for v in np.nonzero(cells == target)[0].tolist():
            if self._orbit_min(prefix, v) < v:
                continue
            child, inv = self.refiner.refine(self.refiner.individualize(cells, v))
            jump = self._visit(child, invs + [inv], prefix + [v])
            if jump is not None and jump < len(prefix):
                return jump
        return None

    def _leaf(self, cells: np.ndarray, invs: list, prefix: list) -> int | None:
        order = np.argsort(cells, kind="stable")
        packed = np.packbits(self.adj[np.ix_(order, order)]).tobytes()
        cert = self.colors[order].astype(np.int64).tobytes() + packed
        key = (tuple(invs), cert)
        if self.first is None:
            self.first = self.best = (key, order, prefix)
            return None
        if key == self.first[0]:
            self._add_automorphism(self.first[1], order)
            common = 0
            for a, b in zip(prefix, self.first[2]):
                if a != b:
                    break
                common += 1
            return common
        if key == self.best[0]:
            self._add_automorphism(self.best[1], order)
        elif key < self.best[0]:
            self.best = (key, order, prefix)
        return None

    def _add_automorphism(self, order_a: np.ndarray, order_b: np.ndarray) -> None:
        gamma = np.empty(self.n, dtype=np.int64)
        gamma[order_a] = order_b
        if np.array_equal(gamma, np.arange(self.n)):
            return
        if not np.array_equal(self.adj[np.ix_(gamma, gamma)], self.adj):
            raise InvariantViolation("equal leaf certificates gave a non-automorphism")
        self.generators.append(gamma)


def _run(d: ColoredDigraph, mode: str, config: RunConfig | None) -> tuple[_Search, int]:
    config = resolve(config)
    check_mode(mode)
    adj, colors = d.augmented(mode)
    search = _Search(adj, colors, config.search_budget)
    search.run()
    logger.debug(
        "canonical search: n=%d mode=%s nodes=%d generators=%d",
        d.n,
        mode,
        search.nodes,
        len(search.generators),
    )
    return search, d.n


def canonical(d: ColoredDigraph, mode: str = "fixed", config: RunConfig | None = None) -> CanonicalForm:
    """Canonical form of ``d`` in the given colour mode.

    Returns
    -------
    CanonicalForm
        ``canonical_bytes`` = version byte, 2-byte vertex count, canonical
        colour sequence, row-major bit-packed canonical adjacency.

    Raises
    ------
    BudgetExceededError
        Above the vertex bound or the search node budget.
    """
    search, n = _run(d, mode, config)
    (_, cert), order, _ = search.best
    total = search.n
    header = bytes([CANON_VERSION]) + total.to_bytes(2, "big")
    positions = np.empty(total, dtype=np.int64)
    positions[order] = np.arange(total)
    return CanonicalForm(
        labeling=_restrict_labeling(positions, n),
        canonical_bytes=header + cert,
        generators=tuple(_restrict(g, n) for g in search.generators),
        mode=mode,
        nodes=search.nodes,
    )


def _restrict(gamma: np.ndarray, n: int) -> Permutation:
    return Permutation._trusted(tuple(int(x) for x in gamma[:n]))


def _restrict_labeling(positions: np.ndarray, n: int) -> Permutation:
    """Canonical ranks of the original vertices (marker vertices dropped)."""
    ranks = np.argsort(np.argsort(positions[:n], kind="stable"), kind="stable")
    return Permutation._trusted(tuple(int(r) for r in ranks))


def automorphisms(d: ColoredDigraph, mode: str = "fixed", config: RunConfig | None = None) -> PermGroup:
    """Automorphism group of ``d`` respecting the colour mode.

    Raises
    ------
    InvariantViolation
        If a generator fails to preserve arcs or colours.
    """
    search, n = _run(d, mode, config)
    gens = [_restrict(g, n) for g in search.generators]
    for g in gens:
        if not d.preserved_by(g, mode):
            raise InvariantViolation("automorphism generator breaks arcs or colours")
    return PermGroup(gens, degree=n)


def find_isomorphism(
    d1: ColoredDigraph,
    d2: ColoredDigraph,
    mode: str = "fixed",
    config: RunConfig | None = None,
) -> Permutation | None:
    """Vertex bijection ``d1 -> d2`` preserving arcs and the colour mode,
    or None."""
    if d1.n != d2.n:
        return None
    s1, n = _run(d1, mode, config)
    s2, _ = _run(d2, mode, config)
    if s1.best[0][1] != s2.best[0][1]:
        return None
    order1, order2 = s1.best[1], s2.best[1]
    iso = np.empty(s1.n, dtype=np.int64)
    iso[order1] = order2
    images = iso[:n]
    if not np.array_equal(d2.adjacency[np.ix_(images, images)], d1.adjacency):
        raise InvariantViolation("canonical match gave a non-isomorphism")
    if not maps_colors(d1.colors, d2.colors, images, mode):
        raise InvariantViolation("canonical match breaks the colour mode")
    return Permutation._trusted(tuple(int(x) for x in images))


def is_isomorphic(d1: ColoredDigraph, d2: ColoredDigraph, mode: str = "fixed", config=None) -> bool:
    return d1.n == d2.n and canonical(d1, mode, config).canonical_bytes == canonical(
        d2, mode, config
    ).canonical_bytes


__all__ = [
    "CanonicalForm",
    "CANON_VERSION",
    "canonical",
    "automorphisms",
    "find_isomorphism",
    "is_isomorphic",
]

# EOF

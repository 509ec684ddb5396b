#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/perm/_group.py
"""Permutation groups backed by a deterministic Schreier-Sims chain."""

from __future__ import annotations

import logging
import random

from .._errors import BudgetExceededError, MalformedInputError
from ._orbits import point_orbits
from ._permutation import Permutation

logger = logging.getLogger(__name__)


class PermGroup:
    """Group generated by permutations of one common degree.

    The stabilizer chain is built eagerly with the deterministic
    Schreier-Sims algorithm. Base points are taken from ``base`` first
    (in the given order) and then, as needed, the least point moved by
    the element that forced a new level.

    Parameters
    ----------
    generators : iterable of Permutation
        Group generators; identities are dropped.
    degree : int, optional
        Required when ``generators`` is empty.
    base : sequence of int, optional
        Prescribed initial base points. Level ``k`` then holds the
        pointwise stabilizer of ``base[:k]``.

    Raises
    ------
    MalformedInputError
        If generators have different degrees.
    """

    def __init__(self, generators=(), degree: int | None = None, base=()):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise MalformedInputError("degree required for an empty generator list")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise MalformedInputError(
                    f"generator degree {g.degree} differs from {degree}"
                )
        self._degree = degree
        self._generators = [g for g in gens if not g.is_identity()]
        self._identity = Permutation.identity(degree)
        self._base: list[int] = [int(b) for b in base]
        self._strong: list[Permutation] = []
        self._transversals: list[dict[int, Permutation]] = []
        self._inverses: list[dict[int, Permutation]] = []
        self._order: int | None = None
        self._schreier_sims()

    # ------------------------------------------------------------------
    # Chain construction
    # ------------------------------------------------------------------

    def _level_gens(self, k: int) -> list[Permutation]:
        fixed = self._base[:k]
        return [s for s in self._strong if all(s[b] == b for b in fixed)]

    def _build_transversal(self, k: int) -> None:
        b = self._base[k]
        gens = self._level_gens(k)
        trans = {b: self._identity}
        queue = [b]
        for p in queue:
            u = trans[p]
            for s in gens:
                q = s[p]
                if q not in trans:
                    trans[q] = u * s
                    queue.append(q)
        self._transversals[k] = dict(sorted(trans.items()))
        self._inverses[k] = {p: u.inverse() for p, u in self._transversals[k].items()}

    def _new_base_point(self, g: Permutation) -> None:
        moved = g.support()
        self._base.append(moved[0])
        self._transversals.append({})
        self._inverses.append({})

    def _sift(self, g: Permutation, start: int = 0) -> tuple[Permutation, int]:
        for k in range(start, len(self._base)):
            p = g[self._base[k]]
            inv = self._inverses[k].get(p)
            if inv is None:
                return g, k
            g = g * inv
        return g, len(self._base)

    def _schreier_sims(self) -> None:
        for _ in self._base:
            self._transversals.append({})
            self._inverses.append({})
        for g in self._generators:
            if all(g[b] == b for b in self._base):
                self._new_base_point(g)
            self._strong.append(g)
        for k in range(len(self._base)):
            self._build_transversal(k)

        i = len(self._base) - 1
        while i >= 0:
            self._build_transversal(i)
            gens = self._level_gens(i)
            trans = self._transversals[i]
            restart = None
            for p, u in trans.items():
                for s in gens:
                    us = u * s
                    v = trans[s[p]]
                    if us == v:
                        continue
                    h, j = self._sift(us * self._inverses[i][s[p]], i + 1)
                    if h.is_identity():
                        continue
                    if j == len(self._base):
                        self._new_base_point(h)
                    self._strong.append(h)
                    for k in range(i + 1, j + 1):
                        self._build_transversal(k)
                    restart = j
                    break
                if restart is not None:
                    break
            i = restart if restart is not None else i - 1
        self._order = 1
        for t in self._transversals:
            self._order *= len(t)
        logger.debug(
            "Schreier-Sims: degree=%d order=%d base=%s strong=%d",
            self._degree,
            self._order,
            self._base,
            len(self._strong),
        )

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def generators(self) -> list[Permutation]:
        return list(self._generators)

    @property
    def strong_generators(self) -> list[Permutation]:
        return list(self._strong)

    @property
    def base(self) -> list[int]:
        return list(self._base)

    @property
    def basic_orbits(self) -> list[list[int]]:
        return [list(t) for t in self._transversals]

    @property
    def transversals(self) -> list[dict[int, Permutation]]:
        return [dict(t) for t in self._transversals]

    @property
    def inverse_transversals(self) -> list[dict[int, Permutation]]:
        return [dict(t) for t in self._inverses]

    def identity(self) -> Permutation:
        return self._identity

    def order(self) -> int:
        return self._order

    def __len__(self) -> int:
        return self._order

    def contains(self, p: Permutation) -> bool:
        if p.degree != self._degree:
            return False
        h, _ = self._sift(p)
        return h.is_identity()

    __contains__ = contains

    def is_trivial(self) -> bool:
        return self._order == 1

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return all(other.contains(g) for g in self._generators)

    def level_generators(self, k: int) -> list[Permutation]:
        """Strong generators of the pointwise stabilizer of ``base[:k]``."""
        return self._level_gens(k)

    def level_orbits(self, k: int) -> list[list[int]]:
        """Orbit partition of the pointwise stabilizer of ``base[:k]``."""
        return point_orbits(self._level_gens(k), self._degree)

    def orbit(self, point: int) -> list[int]:
        seen = {point}
        queue = [point]
        for p in queue:
            for g in self._generators:
                q = g[p]
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return sorted(seen)

    def orbits(self) -> list[list[int]]:
        """Orbit partition, blocks sorted by least element."""
        return point_orbits(self._generators, self._degree)

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self._degree if self._degree else True

    def is_semiregular(self) -> tuple[bool, int]:
        """Return ``(semiregular, orbit_count)``.

        A group is semiregular iff every orbit has size equal to the order.
        """
        blocks = self.orbits()
        return all(len(b) == self._order for b in blocks), len(blocks)

    def stabilizer(self, point: int) -> PermGroup:
        return self.pointwise_stabilizer([point])

    def pointwise_stabilizer(self, points) -> PermGroup:
        points = list(points)
        chain = PermGroup(self._strong, degree=self._degree, base=points)
        gens = chain.level_generators(len(points))
        return PermGroup(gens, degree=self._degree)

    def conjugate(self, x: Permutation) -> PermGroup:
        return PermGroup([g ** x for g in self._generators], degree=self._degree)

    def elements(self, cap: int | None = None) -> list[Permutation]:
        """All elements in a deterministic order.

        Raises
        ------
        BudgetExceededError
            If the group order exceeds ``cap``.
        """
        if cap is not None and self._order > cap:
            raise BudgetExceededError("element enumeration", cap, self._order)
        acc = [self._identity]
        for trans in self._transversals:
            acc = [u * a for u in trans.values() for a in acc]
        return acc

    def random_element(self, rng: random.Random) -> Permutation:
        g = self._identity
        for trans in self._transversals:
            g = rng.choice(list(trans.values())) * g
        return g

    def __repr__(self) -> str:
        return f"PermGroup(degree={self._degree}, order={self._order})"


def group_from_generators(gens, degree: int | None = None) -> PermGroup:
    """Build a PermGroup; thin functional alias used by the public API."""
    return PermGroup(gens, degree=degree)


def enumerate_elements(group: PermGroup, cap: int) -> list[Permutation]:
    return group.elements(cap)


def orbits(group: PermGroup) -> list[list[int]]:
    return group.orbits()


def is_semiregular(group: PermGroup) -> tuple[bool, int]:
    return group.is_semiregular()


__all__ = [
    "PermGroup",
    "group_from_generators",
    "enumerate_elements",
    "orbits",
    "is_semiregular",
]

# EOF

#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/census/_orbits.py
"""Orbits of connection sets under the kernel action.

The kernel ``K`` acts on subsets of ``G`` by ``S -> h^-1 S``,
``S -> S h`` and ``S -> S^alpha``; two sets in one orbit give
``K``-isomorphic bi-Cayley graphs. Subsets are bitmasks over element
indices; each acting permutation is precompiled into byte lookup tables.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field

from .._config import RunConfig, resolve
from .._errors import BudgetExceededError, InvariantViolation, MalformedInputError
from ..ci import bcay_canonical
from ..groups import FiniteGroup, automorphism_generators
from ..perm import Permutation, PermGroup

logger = logging.getLogger(__name__)

ACTIONS = ("k", "stabilizer", "aut")


# ----------------------------------------------------------------------
# The acting group
# ----------------------------------------------------------------------


def action_permutations(
    g: FiniteGroup, action: str = "k", config: RunConfig | None = None
) -> list[Permutation]:
    """Generators of the action on ``G``.

    ``k``: left translations, right translations and automorphisms.
    ``stabilizer``: left translations and automorphisms.
    ``aut``: automorphisms only.
    """
    if action not in ACTIONS:
        raise MalformedInputError(f"unknown action {action!r}; expected one of {ACTIONS}")
    perms = []
    seq = g.generating_sequence()
    if action in ("k", "stabilizer"):
        perms += [Permutation(g.left_mult(g.inv(h))) for h in seq]
    if action == "k":
        perms += [Permutation(g.right_mult(h)) for h in seq]
    perms += [a.as_permutation() for a in automorphism_generators(g, config)]
    return [p for p in perms if not p.is_identity()]


def action_group(g: FiniteGroup, action: str = "k", config: RunConfig | None = None) -> PermGroup:
    return PermGroup(action_permutations(g, action, config), degree=g.order)


def apply_to_set(perm: Permutation, s) -> frozenset:
    return frozenset(perm[x] for x in s)


class _MaskAction:
    """Byte-table images of bitmasks under a list of permutations."""

    def __init__(self, perms: list[Permutation], n: int):
        self.chunks = (n + 7) // 8
        self.tables = []
        for p in perms:
            tables = []
            for c in range(self.chunks):
                row = [0] * 256
                for byte in range(1, 256):
                    low = byte & -byte
                    point = c * 8 + low.bit_length() - 1
                    row[byte] = row[byte ^ low] | (1 << p[point] if point < n else 0)
                tables.append(row)
            self.tables.append(tables)

    def image(self, tables: list, mask: int) -> int:
        out = 0
        for c in range(self.chunks):
            out |= tables[c][(mask >> (8 * c)) & 255]
        return out

    def orbit(self, mask: int) -> set[int]:
        seen = {mask}
        queue = [mask]
        for x in queue:
            for tables in self.tables:
                y = self.image(tables, x)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen


def mask_of(elements) -> int:
    out = 0
    for x in elements:
        out |= 1 << x
    return out


def elements_of(mask: int) -> tuple:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


# ----------------------------------------------------------------------
# Orbit index
# ----------------------------------------------------------------------


@dataclass
class SubsetOrbit:
    representative: frozenset
    orbit_size: int
    admissible: int | None

    @property
    def size(self) -> int:
        return len(self.representative)


@dataclass
class SubsetOrbitIndex:
    """Orbit representatives of admissible subsets.

    ``accounted`` counts every subset of the requested sizes reached by
    the enumeration; it must equal the sum of the binomials. On the
    ``minimize`` path orbit members are never listed, so admissible
    counts are None and an orbit is kept when its least member is
    admissible.
    """

    group: FiniteGroup = field(repr=False)
    sizes: tuple
    action: str
    action_order: int
    constraints: dict
    orbits: list[SubsetOrbit]
    accounted: int
    admissible_count: int | None
    path: str = "direct"
    _owner: dict = field(default_factory=dict, repr=False)

    def stabilizer_order(self, orbit: SubsetOrbit) -> int:
        return self.action_order // orbit.orbit_size

    def representatives(self, size: int | None = None) -> list[frozenset]:
        return [o.representative for o in self.orbits if size is None or o.size == size]

    def orbit_of(self, subset) -> SubsetOrbit:
        """Orbit containing ``subset`` (direct path only)."""
        key = mask_of(subset)
        if key not in self._owner:
            raise MalformedInputError(
                f"{self.group.set_labels(subset)} is not an admissible subset of this index"
            )
        return self._owner[key]

    def to_json(self) -> dict:
        g = self.group
        return {
            "group": g.name,
            "sizes": list(self.sizes),
            "action": self.action,
            "action_order": self.action_order,
            "constraints": dict(self.constraints),
            "path": self.path,
            "accounted": self.accounted,
            "admissible": self.admissible_count,
            "orbits": [
                {
                    "rep": g.set_labels(o.representative),
                    "orbit_size": o.orbit_size,
                    "stabilizer_order": self.stabilizer_order(o),
                    "admissible": o.admissible,
                }
                for o in self.orbits
            ],
        }


def _admissible_test(g: FiniteGroup, contains_identity: bool, generates: bool, predicate):
    everything = g.order

    def test(elements: tuple) -> bool:
        if contains_identity and g.identity not in elements:
            return False
        if generates and len(g.closure(elements)) != everything:
            return False
        return predicate is None or bool(predicate(frozenset(elements)))

    return test


def _direct(g, sizes, perms, test, index: SubsetOrbitIndex) -> None:
    act = _MaskAction(perms, g.order)
    for k in sizes:
        seen: set[int] = set()
        for combo in itertools.combinations(range(g.order), k):
            mask = mask_of(combo)
            if mask in seen:
                continue
            orbit = act.orbit(mask)
            seen |= orbit
            index.accounted += len(orbit)
            if index.action_order % len(orbit):
                raise InvariantViolation(
                    f"orbit size {len(orbit)} does not divide {index.action_order}"
                )
            members = [elements_of(x) for x in orbit]
            good = [m for m in members if test(m)]
            if not good:
                continue
            entry = SubsetOrbit(frozenset(min(good)), len(orbit), len(good))
            index.orbits.append(entry)
            index.admissible_count += len(good)
            for m in good:
                index._owner[mask_of(m)] = entry


class _ChainLevel:
    """Pointwise stabilizer of one prefix of points, with the least point
    of each of its orbits and lazily built descents to deeper levels."""

    def __init__(self, group: PermGroup):
        self.group = group
        self.orbit_min = [0] * group.degree
        for block in group.orbits():
            for p in block:
                self.orbit_min[p] = block[0]
        self.children: dict[int, tuple[dict, PermGroup]] = {}

    def descend(self, point: int) -> tuple[dict, PermGroup]:
        """``({p: w}, H_point)`` with ``p^w == point`` for every ``p`` in
        the orbit of ``point``."""
        if point not in self.children:
            chain = PermGroup(self.group.strong_generators, degree=self.group.degree, base=[point])
            stab = PermGroup(chain.level_generators(1), degree=self.group.degree)
            self.children[point] = (chain.inverse_transversals[0], stab)
        return self.children[point]


class _LeastImage:
    """Lexicographically least image of a subset under ``group``.

    Points of the image are fixed one at a time: the next point is the
    least one reachable in the stabilizer of those already fixed, and
    every partial image reaching it is carried forward with the number
    of coset representatives that produced it. The multiplicities give
    the order of the set stabilizer without listing group elements.
    """

    def __init__(self, group: PermGroup, budget: int):
        self.group = group
        self.budget = budget
        self._levels: dict[tuple, _ChainLevel] = {(): _ChainLevel(group)}

    def _level(self, prefix: tuple) -> _ChainLevel:
        level = self._levels.get(prefix)
        if level is None:
            _, stab = self._level(prefix[:-1]).descend(prefix[-1])
            level = self._levels[prefix] = _ChainLevel(stab)
        return level

    def least(self, subset: tuple, reject_below: bool = False) -> tuple[tuple, int] | None:
        """``(least image, |stabilizer of subset|)``.

        With ``reject_below`` the search stops and returns None as soon as
        the image is known to precede ``subset``.

        Raises
        ------
        BudgetExceededError
            If more than ``budget`` partial images are generated.
        """
        prefix: tuple = ()
        frontier = {frozenset(subset): 1}
        nodes = 0
        while True:
            level = self._level(prefix)
            if len(prefix) == len(subset):
                return prefix, frontier[frozenset()] * level.group.order()
            if level.group.is_trivial():
                best = min(tuple(sorted(t)) for t in frontier)
                image = prefix + best
                if reject_below and image < subset:
                    return None
                return image, frontier[frozenset(best)]
            point = min(level.orbit_min[p] for t in frontier for p in t)
            if reject_below and point < subset[len(prefix)]:
                return None
            inverses, _ = level.descend(point)
            nxt: dict[frozenset, int] = {}
            for t, mult in frontier.items():
                for p in t:
                    w = inverses.get(p)
                    if w is None:
                        continue
                    image = frozenset(w[x] for x in t if x != p)
                    nxt[image] = nxt.get(image, 0) + mult
                    nodes += 1
            if nodes > self.budget:
                raise BudgetExceededError("least subset image", self.budget, nodes)
            frontier = nxt
            prefix += (point,)


def _minimize(g, sizes, group: PermGroup, test, budget: int, index: SubsetOrbitIndex) -> None:
    """Orderly generation of lexicographically least orbit members.

    Dropping the largest point of a least member leaves a least member,
    so size ``k`` candidates are the size ``k - 1`` representatives
    extended by a larger point. Only representatives are stored; an
    orbit is kept when its least member is admissible.
    """
    search = _LeastImage(group, budget)
    order = group.order()
    wanted = set(sizes)
    layer = [((), order)]
    for k in range(max(sizes) + 1):
        if k in wanted:
            for rep, stab in layer:
                index.accounted += order // stab
                if test(rep):
                    index.orbits.append(SubsetOrbit(frozenset(rep), order // stab, None))
        if k == max(sizes):
            break
        grown = []
        for rep, _ in layer:
            for x in range(rep[-1] + 1 if rep else 0, g.order):
                candidate = rep + (x,)
                found = search.least(candidate, reject_below=True)
                if found is not None:
                    grown.append((candidate, found[1]))
        logger.debug("minimize(%s): %d representatives of size %d", g.name, len(grown), k + 1)
        layer = grown
    index.admissible_count = None


def k_orbits_on_subsets(
    g: FiniteGroup,
    sizes,
    config: RunConfig | None = None,
    action: str = "k",
    contains_identity: bool = False,
    generates: bool = False,
    predicate=None,
) -> SubsetOrbitIndex:
    """One representative per orbit of the connection-set action.

    Parameters
    ----------
    g : FiniteGroup
    sizes : iterable of int
        Subset sizes to enumerate.
    config : RunConfig, optional
    action : {"k", "stabilizer", "aut"}
        See :func:`action_permutations`.
    contains_identity, generates : bool
        Admissibility constraints; ``generates`` means ``<S> = G``.
    predicate : callable, optional
        Extra admissibility test on a frozenset of element indices.

    Returns
    -------
    SubsetOrbitIndex
        Representatives are the lexicographically least admissible member
        of their orbit, sorted by size then lexicographically.

    Raises
    ------
    BudgetExceededError
        If the subset count exceeds ``census_budget`` without
        ``stretch_z2_5``, or one least-image search under it generates
        more than ``element_cap`` partial images.
    InvariantViolation
        If the orbit-counting cross-check fails.
    """
    cfg = resolve(config)
    sizes = tuple(sorted(set(int(k) for k in sizes)))
    if any(not 0 <= k <= g.order for k in sizes):
        raise MalformedInputError(f"subset sizes {sizes} outside 0..{g.order}")
    perms = action_permutations(g, action, cfg)
    group = PermGroup(perms, degree=g.order)
    total = sum(math.comb(g.order, k) for k in sizes)
    index = SubsetOrbitIndex(
        group=g,
        sizes=sizes,
        action=action,
        action_order=group.order(),
        constraints={
            "contains_identity": contains_identity,
            "generates": generates,
            "predicate": getattr(predicate, "__name__", None) if predicate else None,
        },
        orbits=[],
        accounted=0,
        admissible_count=0,
    )
    test = _admissible_test(g, contains_identity, generates, predicate)
    if total <= cfg.census_budget:
        _direct(g, sizes, perms, test, index)
    elif cfg.stretch_z2_5:
        index.path = "minimize"
        logger.warning(
            "k_orbits_on_subsets(%s): %d subsets over the census budget, minimizing",
            g.name,
            total,
        )
        _minimize(g, sizes, group, test, cfg.element_cap, index)
    else:
        raise BudgetExceededError(f"subset census of {g.name}", cfg.census_budget, total)
    if index.accounted != total:
        raise InvariantViolation(f"orbits account for {index.accounted} of {total} subsets")
    index.orbits.sort(key=lambda o: (o.size, sorted(o.representative)))
    logger.info(
        "k_orbits_on_subsets(%s, sizes=%s, action=%s): %d orbits, %s admissible, |action|=%d",
        g.name,
        list(sizes),
        action,
        len(index.orbits),
        index.admissible_count,
        index.action_order,
    )
    return index


def iso_class_partition(
    g: FiniteGroup, reps, config: RunConfig | None = None
) -> list[list[frozenset]]:
    """Group connection sets by the canonical form of ``BCay(G, .)`` with
    exchangeable parts; classes in order of first appearance."""
    classes: dict[bytes, list[frozenset]] = {}
    for s in reps:
        classes.setdefault(bcay_canonical(g, s, config), []).append(frozenset(s))
    return list(classes.values())


__all__ = [
    "ACTIONS",
    "SubsetOrbit",
    "SubsetOrbitIndex",
    "action_permutations",
    "action_group",
    "apply_to_set",
    "k_orbits_on_subsets",
    "iso_class_partition",
]

# EOF

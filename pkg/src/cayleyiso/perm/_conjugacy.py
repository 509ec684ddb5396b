#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/perm/_conjugacy.py
"""Subgroup conjugacy search inside an ambient permutation group."""

from __future__ import annotations

import logging

from .._errors import BudgetExceededError, SubgroupNotContainedError
from ._group import PermGroup
from ._permutation import Permutation

logger = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 200_000
DEFAULT_ENUM_CAP = 1_000_000


class _Search:
    """Backtrack for x in ``a`` with ``g_i ** x`` in ``h2`` for each generator.

    The images ``y_i = g_i ** x`` are fixed lazily: once a point ``p`` and
    its image ``g_i(p)`` both have known x-images, ``y_i`` must map
    ``x(p)`` to ``x(g_i(p))``, which leaves few candidates in ``h2``. With
    ``y_i`` known, ``x(g_i(p)) = y_i(x(p))`` propagates the partial map.
    """

    def __init__(self, a: PermGroup, h1: PermGroup, h2: PermGroup, budget: int):
        self.a = a
        self.h2 = h2
        self.gens = h1.generators
        self.gen_inv = [g.inverse() for g in self.gens]
        self.ctypes = [g.cycle_type() for g in self.gens]
        self.budget = budget
        self.nodes = 0
        self.base = a.base
        self.trans = a.transversals
        self.trans_inv = a.inverse_transversals
        degree = a.degree
        self.orbit_id = []
        for k in range(len(self.base) + 1):
            ids = [0] * degree
            for n, block in enumerate(a.level_orbits(k)):
                for p in block:
                    ids[p] = n
            self.orbit_id.append(ids)
        self.by_pair: dict[tuple[int, int], list[Permutation]] = {}
        elements = h2.elements()
        self.h2_ctype = {y: y.cycle_type() for y in elements}
        for y in elements:
            for p in range(degree):
                self.by_pair.setdefault((p, y[p]), []).append(y)

    # ------------------------------------------------------------------

    def _close(self, f: dict, used: set, ys: list, queue: list):
        """Propagate forced images; yields every consistent closure."""
        while queue:
            p = queue.pop()
            fp = f[p]
            for i, g in enumerate(self.gens):
                y = ys[i]
                for q, forward in ((g[p], True), (self.gen_inv[i][p], False)):
                    if y is None:
                        if q not in f:
                            continue
                        src, dst = (fp, f[q]) if forward else (f[q], fp)
                        for cand in self.by_pair.get((src, dst), ()):
                            if self.h2_ctype[cand] != self.ctypes[i]:
                                continue
                            ys2 = list(ys)
                            ys2[i] = (cand, cand.inverse())
                            yield from self._close(dict(f), set(used), ys2, list(f))
                        return
                    expected = y[0][fp] if forward else y[1][fp]
                    if q in f:
                        if f[q] != expected:
                            return
                    else:
                        if expected in used:
                            return
                        f[q] = expected
                        used.add(expected)
                        queue.append(q)
        yield f, used, ys

    def _consistent(self, level: int, y_inv: Permutation, f: dict) -> bool:
        ids = self.orbit_id[level]
        return all(ids[y_inv[img]] == ids[p] for p, img in f.items())

    def _verify(self, x: Permutation) -> bool:
        return all(self.h2.contains(g**x) for g in self.gens)

    def run(self, level, y, y_inv, f, used, ys):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError("conjugacy backtrack", self.budget)
        if level == len(self.base):
            return y if self._verify(y) else None
        b = self.base[level]
        trans = self.trans[level]
        if b in f:
            q = y_inv[f[b]]
            candidates = [q] if q in trans else []
        else:
            candidates = list(trans)
        for q in candidates:
            y_new = trans[q] * y
            y_inv_new = y_inv * self.trans_inv[level][q]
            if b in f:
                states = [(f, used, ys)]
            else:
                img = y_new[b]
                if img in used:
                    continue
                f2 = dict(f)
                f2[b] = img
                states = self._close(f2, used | {img}, list(ys), [b])
            for f3, used3, ys3 in states:
                if not self._consistent(level + 1, y_inv_new, f3):
                    continue
                found = self.run(level + 1, y_new, y_inv_new, f3, used3, ys3)
                if found is not None:
                    return found
        return None


def conjugating_element(
    a: PermGroup,
    h1: PermGroup,
    h2: PermGroup,
    node_budget: int = DEFAULT_NODE_BUDGET,
    enum_cap: int = DEFAULT_ENUM_CAP,
) -> Permutation | None:
    """Find x in ``a`` with ``h1 ** x == h2``.

    Parameters
    ----------
    a : PermGroup
        Ambient group.
    h1, h2 : PermGroup
        Subgroups of ``a``.
    node_budget : int
        Backtrack node budget.
    enum_cap : int
        When the backtrack runs out of budget and ``a`` has at most this
        many elements, every element of ``a`` is tried instead.

    Returns
    -------
    Permutation or None
        A conjugating element, verified by conjugating the generators of
        ``h1`` into ``h2``; ``None`` if the subgroups are not conjugate.

    Raises
    ------
    SubgroupNotContainedError
        If ``h1`` or ``h2`` is not a subgroup of ``a``.
    BudgetExceededError
        If neither the backtrack nor enumeration fits the budgets.
    """
    for name, h in (("h1", h1), ("h2", h2)):
        if h.degree != a.degree or not h.is_subgroup_of(a):
            raise SubgroupNotContainedError(f"{name} is not contained in the ambient group")
    if h1.order() != h2.order():
        return None
    if h1.is_subgroup_of(h2):
        return a.identity()

    search = _Search(a, h1, h2, node_budget)
    identity = a.identity()
    try:
        x = search.run(0, identity, identity, {}, set(), [None] * len(search.gens))
        logger.debug("conjugacy backtrack: %d nodes", search.nodes)
        return x
    except BudgetExceededError:
        if a.order() > enum_cap:
            raise
        logger.info(
            "conjugacy backtrack exhausted %d nodes; enumerating %d elements",
            node_budget,
            a.order(),
        )
    for x in a.elements(enum_cap):
        if search._verify(x):
            return x
    return None


__all__ = ["conjugating_element"]

# EOF

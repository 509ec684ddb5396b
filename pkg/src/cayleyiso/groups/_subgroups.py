#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/groups/_subgroups.py
"""Subgroup lattice, quotients, derived series and Sylow subgroups."""

from __future__ import annotations

import logging

from .._config import RunConfig, resolve
from .._errors import BudgetExceededError, NotNormalError
from ._finite_group import FiniteGroup, GroupMap, Subgroup

logger = logging.getLogger(__name__)

SUBGROUP_ORDER_BOUND = 64


def cyclic_subgroups(g: FiniteGroup) -> dict[frozenset, int]:
    """Member set of each cyclic subgroup mapped to its least generator."""
    seen = {}
    for x in range(g.order):
        seen.setdefault(g.closure([x]), x)
    return seen


def all_subgroups(g: FiniteGroup, config: RunConfig | None = None) -> list[Subgroup]:
    """Every subgroup of ``g`` exactly once, sorted by (order, members).

    Built by closing the cyclic subgroups under joins with one more
    cyclic generator until nothing new appears.

    Raises
    ------
    BudgetExceededError
        If ``|G|`` exceeds the subgroup order bound.
    """
    config = resolve(config)
    bound = max(SUBGROUP_ORDER_BOUND, config.aut_bound)
    if g.order > bound:
        raise BudgetExceededError("subgroup enumeration order bound", bound, g.order)
    if g._subgroup_cache is not None:
        return list(g._subgroup_cache)
    cyclic = cyclic_subgroups(g)
    gens = [x for c, x in cyclic.items() if len(c) > 1]
    found = set(cyclic)
    queue = list(cyclic)
    for members in queue:
        for x in gens:
            if x in members:
                continue
            joined = g.closure(list(members) + [x])
            if joined not in found:
                found.add(joined)
                queue.append(joined)
    subs = sorted(
        (Subgroup(g, tuple(sorted(m))) for m in found),
        key=lambda s: (s.order, s.members),
    )
    g._subgroup_cache = tuple(subs)
    logger.debug("%s: %d subgroups", g.name, len(subs))
    return subs


def subgroups_of_order(g: FiniteGroup, order: int, config: RunConfig | None = None) -> list[Subgroup]:
    return [s for s in all_subgroups(g, config) if s.order == order]


def normal_subgroups(g: FiniteGroup, config: RunConfig | None = None) -> list[Subgroup]:
    return [s for s in all_subgroups(g, config) if s.is_normal()]


def characteristic_subgroups(
    g: FiniteGroup, auts: list[GroupMap], config: RunConfig | None = None
) -> list[Subgroup]:
    """Subgroups mapped onto themselves by every map in ``auts``
    (a generating set of Aut(G) suffices)."""
    return [
        s
        for s in all_subgroups(g, config)
        if all(s.image(a) == s for a in auts)
    ]


# ----------------------------------------------------------------------
# Quotients
# ----------------------------------------------------------------------


def quotient_group(g: FiniteGroup, h: Subgroup) -> tuple[FiniteGroup, GroupMap]:
    """``G/H`` with cosets labelled ``[rep]`` by their least member.

    Returns
    -------
    quotient : FiniteGroup
    projection : GroupMap
        Surjective homomorphism ``G -> G/H`` with kernel ``H``.

    Raises
    ------
    NotNormalError
        If ``h`` is not normal in ``g``.
    """
    if not h.is_normal():
        raise NotNormalError(f"subgroup of order {h.order} is not normal in {g.name}")
    coset_of = {}
    reps = []
    for x in range(g.order):
        if x in coset_of:
            continue
        coset = sorted(g.mul(k, x) for k in h.members)
        rep = coset[0]
        for y in coset:
            coset_of[y] = len(reps)
        reps.append(rep)
    table = [[coset_of[g.mul(a, b)] for b in reps] for a in reps]
    labels = [f"[{g.label(r)}]" for r in reps]
    named = {k: coset_of[v] for k, v in g.named.items()}
    quotient = FiniteGroup(table, labels, name=f"{g.name}/{h.order}", named=named)
    projection = GroupMap(g, quotient, tuple(coset_of[x] for x in range(g.order)))
    return quotient, projection


def preimage(projection: GroupMap, elements) -> frozenset:
    """``pi^-1(elements)`` for a projection onto a quotient."""
    wanted = frozenset(elements)
    return frozenset(x for x, q in enumerate(projection.images) if q in wanted)


# ----------------------------------------------------------------------
# Derived series, Sylow subgroups
# ----------------------------------------------------------------------


def commutator_subgroup(g: FiniteGroup, members=None) -> frozenset:
    members = sorted(range(g.order) if members is None else members)
    comms = {
        g.product(g.inv(a), g.inv(b), a, b) for a in members for b in members
    }
    return g.closure(comms)


def derived_series(g: FiniteGroup) -> list[Subgroup]:
    """``G = G^(0) > G^(1) > ...`` until it stabilizes."""
    series = [Subgroup(g, tuple(range(g.order)))]
    while True:
        nxt = commutator_subgroup(g, series[-1].members)
        if len(nxt) == series[-1].order:
            return series
        series.append(Subgroup(g, tuple(sorted(nxt))))


def is_solvable(g: FiniteGroup) -> bool:
    return derived_series(g)[-1].order == 1


def _is_prime_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def prime_divisors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def sylow_subgroup(g: FiniteGroup, p: int) -> Subgroup:
    """One Sylow ``p``-subgroup.

    When the ``p``-elements form a subgroup it is returned directly;
    otherwise ``p``-elements are added greedily (by index) while the
    span stays a ``p``-group. A maximal ``p``-subgroup is a Sylow
    subgroup, so the result is deterministic and complete.
    """
    orders = g.element_orders()
    p_elements = [x for x in range(g.order) if _is_prime_power(orders[x], p)]
    whole = frozenset(p_elements)
    if g.closure(p_elements) == whole:
        return Subgroup(g, tuple(sorted(whole)))
    span = frozenset({g.identity})
    for x in p_elements:
        if x in span:
            continue
        bigger = g.closure(list(span) + [x])
        if _is_prime_power(len(bigger), p):
            span = bigger
    return Subgroup(g, tuple(sorted(span)))


__all__ = [
    "all_subgroups",
    "cyclic_subgroups",
    "subgroups_of_order",
    "normal_subgroups",
    "characteristic_subgroups",
    "quotient_group",
    "preimage",
    "commutator_subgroup",
    "derived_series",
    "is_solvable",
    "sylow_subgroup",
    "prime_divisors",
]

# EOF

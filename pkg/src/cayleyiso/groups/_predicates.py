#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/groups/_predicates.py
"""Group-level predicates used to screen candidate 2PCI groups.

Each predicate is a necessary condition: a group failing any of them
cannot have every bi-Cayley graph isomorphism induced by a bi-Cayley
isomorphism.
"""

from __future__ import annotations

import logging

from .._config import RunConfig, resolve
from .._errors import BudgetExceededError
from ..perm import UnionFind
from ._automorphisms import (
    automorphism_generators,
    automorphism_group,
    elementary_abelian_rank,
    group_isomorphic,
)
from ._finite_group import FiniteGroup, GroupMap, Subgroup
from ._named import quaternion
from ._subgroups import all_subgroups, is_solvable, prime_divisors, sylow_subgroup

logger = logging.getLogger(__name__)

HOMOGENEOUS_ORDER_BOUND = 32


# ----------------------------------------------------------------------
# Shape helpers
# ----------------------------------------------------------------------


def is_cyclic(g: FiniteGroup) -> bool:
    return max(g.element_orders()) == g.order


def is_elementary_abelian(g: FiniteGroup) -> bool:
    return elementary_abelian_rank(g) is not None


def describe_group(g: FiniteGroup) -> str:
    """Short isomorphism-type description of a small group."""
    if g.order == 1:
        return "1"
    if is_cyclic(g):
        return f"Z{g.order}"
    ea = elementary_abelian_rank(g)
    if ea is not None:
        return f"Z{ea[0]}^{ea[1]}"
    if g.order == 8 and group_isomorphic(g, quaternion()) is not None:
        return "Q8"
    kind = "abelian" if g.is_abelian() else "nonabelian"
    return f"{kind} of order {g.order}, exponent {max(g.element_orders())}"


def _subgroup_orbits(subs: list[Subgroup], gens: list[GroupMap]) -> UnionFind:
    index = {s: i for i, s in enumerate(subs)}
    uf = UnionFind(range(len(subs)))
    for s in subs:
        for a in gens:
            uf.union(index[s], index[s.image(a)])
    return uf


# ----------------------------------------------------------------------
# Subgroup equivalence
# ----------------------------------------------------------------------


def same_order_subgroups_aut_equivalent(
    g: FiniteGroup, config: RunConfig | None = None
) -> tuple[bool, dict]:
    """Whether Aut(G) is transitive on the subgroups of each order.

    Returns
    -------
    ok : bool
    certificate : dict
        ``{"orbits": {order: n_orbits}}`` and, on failure, ``"pair"``
        with the member labels of two inequivalent subgroups.
    """
    config = resolve(config)
    subs = all_subgroups(g, config)
    uf = _subgroup_orbits(subs, automorphism_generators(g, config))
    per_order: dict[int, list[int]] = {}
    for i, s in enumerate(subs):
        per_order.setdefault(s.order, []).append(i)
    certificate: dict = {"orbits": {}}
    ok = True
    for order, idx in per_order.items():
        roots = sorted({uf.find(i) for i in idx})
        certificate["orbits"][order] = len(roots)
        if len(roots) > 1 and ok:
            ok = False
            first = idx[0]
            other = next(i for i in idx if not uf.same(i, first))
            certificate["pair"] = [subs[first].labels(), subs[other].labels()]
    return ok, certificate


def index2_subgroups_equivalent(h: FiniteGroup, config: RunConfig | None = None) -> bool:
    """All index-2 subgroups of ``h`` lie in one Aut(h)-orbit."""
    if h.order % 2:
        return True
    subs = all_subgroups(h, config)
    halves = [i for i, s in enumerate(subs) if s.index == 2]
    if len(halves) <= 1:
        return True
    uf = _subgroup_orbits(subs, automorphism_generators(h, config))
    return len({uf.find(i) for i in halves}) == 1


def is_iso_group(g: FiniteGroup, config: RunConfig | None = None) -> bool:
    """Same-order subgroups are pairwise isomorphic."""
    by_order: dict[int, list[Subgroup]] = {}
    for s in all_subgroups(g, config):
        by_order.setdefault(s.order, []).append(s)
    for subs in by_order.values():
        first, _ = subs[0].as_group()
        for other in subs[1:]:
            if group_isomorphic(first, other.as_group()[0]) is None:
                return False
    return True


# ----------------------------------------------------------------------
# Element-level conditions
# ----------------------------------------------------------------------


def fif_failure(g: FiniteGroup, config: RunConfig | None = None) -> tuple[int, int] | None:
    """A same-order pair ``(x, y)`` with no automorphism sending ``x`` to
    ``y`` or ``y^-1``; None when ``g`` is an FIF-group."""
    uf = UnionFind(range(g.order))
    for a in automorphism_generators(g, config):
        for x in range(g.order):
            uf.union(x, a(x))
    for x in range(g.order):
        uf.union(x, g.inv(x))
    orders = g.element_orders()
    first_of_order: dict[int, int] = {}
    for x in range(g.order):
        rep = first_of_order.setdefault(orders[x], x)
        if not uf.same(rep, x):
            return rep, x
    return None


def is_fif_group(g: FiniteGroup, config: RunConfig | None = None) -> bool:
    return fif_failure(g, config) is None


def is_homogeneous(g: FiniteGroup, config: RunConfig | None = None) -> bool:
    """Every isomorphism between subgroups of ``g`` extends to Aut(G).

    Checked per Aut-class of subgroups with representative ``A``: every
    subgroup isomorphic to ``A`` is an Aut-image of ``A``, and the
    setwise stabilizer of ``A`` in Aut(G) restricts onto all of Aut(A).

    Raises
    ------
    BudgetExceededError
        If ``|G|`` exceeds the homogeneity bound.
    """
    config = resolve(config)
    if g.order > HOMOGENEOUS_ORDER_BOUND:
        raise BudgetExceededError("homogeneity order bound", HOMOGENEOUS_ORDER_BOUND, g.order)
    auts = automorphism_group(g, config)
    subs = all_subgroups(g, config)
    uf = _subgroup_orbits(subs, automorphism_generators(g, config))
    seen_roots = set()
    for i, a_sub in enumerate(subs):
        root = uf.find(i)
        if root in seen_roots:
            continue
        seen_roots.add(root)
        a_group, embed = a_sub.as_group()
        for j, b_sub in enumerate(subs):
            if b_sub.order != a_sub.order or uf.same(i, j):
                continue
            if group_isomorphic(a_group, b_sub.as_group()[0]) is not None:
                logger.debug("%s: isomorphic subgroups in different Aut-orbits", g.name)
                return False
        members = a_sub.member_set()
        restrictions = {
            tuple(alpha(x) for x in embed)
            for alpha in auts
            if alpha.apply_set(members) == members
        }
        if len(restrictions) != len(automorphism_group(a_group, config)):
            logger.debug("%s: subgroup automorphism fails to extend", g.name)
            return False
    return True


# ----------------------------------------------------------------------
# Sylow restrictions
# ----------------------------------------------------------------------


def _sylow_ok(p: int, sylow: FiniteGroup) -> bool:
    if sylow.order == 1:
        return True
    if p == 3:
        # Z3, Z3^2 or Z9
        return sylow.order in (3, 9)
    if is_elementary_abelian(sylow):
        return True
    if p == 2:
        if sylow.order == 4 and is_cyclic(sylow):
            return True
        if sylow.order == 8 and group_isomorphic(sylow, quaternion()) is not None:
            return True
    return False


def sylow_condition_2pci(g: FiniteGroup) -> tuple[bool, dict]:
    """Check each Sylow subgroup against the groups a 2PCI-group allows.

    The Sylow 3-subgroup must be ``Z3``, ``Z3^2`` or ``Z9``; for every
    other prime it must be elementary abelian, or ``Z4``/``Q8`` when
    ``p = 2``.

    Returns
    -------
    ok : bool
    report : dict
        ``{"primes": [{"prime", "order", "type", "ok"}, ...],
        "solvable": bool, "failed_primes": [...]}``
    """
    primes = []
    for p in prime_divisors(g.order):
        sylow, _ = sylow_subgroup(g, p).as_group()
        ok = _sylow_ok(p, sylow)
        primes.append(
            {"prime": p, "order": sylow.order, "type": describe_group(sylow), "ok": ok}
        )
    failed = [r["prime"] for r in primes if not r["ok"]]
    report = {"primes": primes, "solvable": is_solvable(g), "failed_primes": failed}
    return not failed, report


__all__ = [
    "is_cyclic",
    "is_elementary_abelian",
    "describe_group",
    "same_order_subgroups_aut_equivalent",
    "index2_subgroups_equivalent",
    "is_iso_group",
    "fif_failure",
    "is_fif_group",
    "is_homogeneous",
    "sylow_condition_2pci",
]

# EOF

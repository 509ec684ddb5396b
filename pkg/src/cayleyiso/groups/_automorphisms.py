#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/groups/_automorphisms.py
"""Automorphisms and isomorphisms of table groups by generator-image search.

A homomorphism out of ``g`` is determined by the images of a generating
sequence. Candidates are filtered by element order; each partial
assignment is propagated over the Cayley graph of the span generated so
far and rejected as soon as an edge disagrees or two elements collide.
"""

from __future__ import annotations

import logging
import math

from .._config import RunConfig, resolve
from .._errors import BudgetExceededError
from ..perm import PermGroup
from ._finite_group import FiniteGroup, GroupMap

logger = logging.getLogger(__name__)


# ----------------------------------------------------------------------
# Core search
# ----------------------------------------------------------------------


def _propagate(source: FiniteGroup, target: FiniteGroup, gens, images):
    """Extend ``gens[i] -> images[i]`` over the span; None if inconsistent
    or not injective."""
    f = {source.identity: target.identity}
    queue = [source.identity]
    for x in queue:
        fx = f[x]
        for g, h in zip(gens, images):
            y = source.mul(x, g)
            fy = target.mul(fx, h)
            known = f.get(y)
            if known is None:
                f[y] = fy
                queue.append(y)
            elif known != fy:
                return None
    if len(set(f.values())) != len(f):
        return None
    return f


def _search_maps(source: FiniteGroup, target: FiniteGroup, first_only: bool, cap: int):
    """Yield every injective homomorphism ``source -> target`` that is onto
    a group of the same order (i.e. every isomorphism)."""
    if source.order != target.order:
        return
    gens = source.generating_sequence()
    s_orders = source.element_orders()
    t_orders = target.element_orders()
    by_order: dict[int, list[int]] = {}
    for y in range(target.order):
        by_order.setdefault(t_orders[y], []).append(y)
    candidates = [by_order.get(s_orders[g], []) for g in gens]
    found = 0

    def extend(k: int, images: list):
        nonlocal found
        if k == len(gens):
            found += 1
            if found > cap:
                raise BudgetExceededError("automorphism enumeration", cap, found)
            f = _propagate(source, target, gens, images)
            yield GroupMap(source, target, tuple(f[x] for x in range(source.order)))
            return
        for y in candidates[k]:
            images.append(y)
            if _propagate(source, target, gens[: k + 1], images) is not None:
                yield from extend(k + 1, images)
                if first_only and found:
                    images.pop()
                    return
            images.pop()

    yield from extend(0, [])


# ----------------------------------------------------------------------
# Elementary abelian groups
# ----------------------------------------------------------------------


def elementary_abelian_rank(g: FiniteGroup) -> tuple[int, int] | None:
    """``(p, k)`` when ``g`` is ``Z_p^k`` (p prime, k >= 1), else None."""
    if g.order == 1 or not g.is_abelian():
        return None
    orders = set(g.element_orders()) - {1}
    if len(orders) != 1:
        return None
    p = orders.pop()
    if any(p % d == 0 for d in range(2, math.isqrt(p) + 1)):
        return None
    k = round(math.log(g.order, p))
    return (p, k) if p**k == g.order else None


def gl_order(k: int, p: int) -> int:
    out = 1
    for i in range(k):
        out *= p**k - p**i
    return out


def _coordinates(g: FiniteGroup, basis: list[int], p: int) -> dict[tuple, int]:
    coords = {}
    for vec in _vectors(len(basis), p):
        x = g.identity
        for b, c in zip(basis, vec):
            x = g.mul(x, g.power(b, c))
        coords[vec] = x
    return coords


def _vectors(k: int, p: int):
    if k == 0:
        yield ()
        return
    for head in _vectors(k - 1, p):
        for c in range(p):
            yield head + (c,)


def _primitive_root(p: int) -> int:
    for w in range(2, p):
        if all(pow(w, (p - 1) // q, p) != 1 for q in _prime_factors(p - 1)):
            return w
    return 1


def _prime_factors(n: int) -> list[int]:
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


def _linear_generators(g: FiniteGroup, p: int, k: int) -> list[GroupMap]:
    """Generators of GL(k, p) acting on a basis chosen from ``g``."""
    basis = g.generating_sequence()
    coords = _coordinates(g, basis, p)

    def from_basis_images(new_basis: list[tuple]) -> GroupMap:
        images = [0] * g.order
        for vec, x in coords.items():
            out = [0] * k
            for c, img in zip(vec, new_basis):
                for i in range(k):
                    out[i] = (out[i] + c * img[i]) % p
            images[x] = coords[tuple(out)]
        return GroupMap(g, g, tuple(images))

    unit = [tuple(int(i == j) for i in range(k)) for j in range(k)]
    gens = []
    if p > 2:
        w = _primitive_root(p)
        gens.append(from_basis_images([tuple(w * c % p for c in unit[0])] + unit[1:]))
    if k >= 2:
        shear = tuple((a + b) % p for a, b in zip(unit[0], unit[1]))
        gens.append(from_basis_images([shear] + unit[1:]))
        gens.append(from_basis_images([unit[1], unit[0]] + unit[2:]))
        if k > 2:
            gens.append(from_basis_images(unit[1:] + unit[:1]))
    return [a for a in gens if not a.is_identity()]


# ----------------------------------------------------------------------
# Public API
# ----------------------------------------------------------------------


def automorphism_group(g: FiniteGroup, config: RunConfig | None = None) -> list[GroupMap]:
    """All automorphisms of ``g`` sorted by image tuple (identity first).

    Parameters
    ----------
    g : FiniteGroup
    config : RunConfig, optional
        ``aut_bound`` caps ``|G|``; ``element_cap`` caps ``|Aut(G)|``.

    Returns
    -------
    list of GroupMap

    Raises
    ------
    BudgetExceededError
        If ``|G| > aut_bound`` or the automorphism count exceeds
        ``element_cap``.
    """
    config = resolve(config)
    if g.order > config.aut_bound:
        raise BudgetExceededError("automorphism group order bound", config.aut_bound, g.order)
    ea = elementary_abelian_rank(g)
    if ea is not None and gl_order(ea[1], ea[0]) > config.element_cap:
        raise BudgetExceededError(
            "automorphism enumeration", config.element_cap, gl_order(ea[1], ea[0])
        )
    if g._aut_cache is not None:
        return list(g._aut_cache)
    auts = list(_search_maps(g, g, first_only=False, cap=config.element_cap))
    auts.sort(key=lambda a: a.images)
    g._aut_cache = tuple(auts)
    logger.debug("Aut(%s): %d automorphisms", g.name, len(auts))
    return auts


def automorphism_generators(g: FiniteGroup, config: RunConfig | None = None) -> list[GroupMap]:
    """A small generating set of ``Aut(G)``.

    Elementary abelian groups get the standard ``GL(k, p)`` generators
    without listing the group; others are picked greedily from the full
    automorphism list.
    """
    ea = elementary_abelian_rank(g)
    if ea is not None:
        p, k = ea
        return _linear_generators(g, p, k)
    auts = automorphism_group(g, config)
    chosen: list[GroupMap] = []
    span = PermGroup([], degree=g.order)
    for a in auts:
        if span.order() == len(auts):
            break
        perm = a.as_permutation()
        if perm not in span:
            chosen.append(a)
            span = PermGroup([c.as_permutation() for c in chosen], degree=g.order)
    return chosen


def automorphism_permgroup(g: FiniteGroup, config: RunConfig | None = None) -> PermGroup:
    """``Aut(G)`` as a permutation group on the element indices of ``g``."""
    gens = automorphism_generators(g, config)
    return PermGroup([a.as_permutation() for a in gens], degree=g.order)


def automorphism_count(g: FiniteGroup, config: RunConfig | None = None) -> int:
    ea = elementary_abelian_rank(g)
    if ea is not None:
        return gl_order(ea[1], ea[0])
    return automorphism_permgroup(g, config).order()


def group_isomorphic(g: FiniteGroup, h: FiniteGroup) -> GroupMap | None:
    """An isomorphism ``g -> h`` or None.

    Cheap invariants (order, abelianness, element-order multiset) are
    compared before the search.
    """
    if g.order != h.order or g.is_abelian() != h.is_abelian():
        return None
    if g.order_statistics() != h.order_statistics():
        return None
    for iso in _search_maps(g, h, first_only=True, cap=1):
        return iso
    return None


def extends_to_automorphism(
    g: FiniteGroup, phi: dict[int, int], auts: list[GroupMap]
) -> bool:
    """True iff some automorphism agrees with the partial map ``phi``."""
    return any(all(a(x) == y for x, y in phi.items()) for a in auts)


__all__ = [
    "automorphism_group",
    "automorphism_generators",
    "automorphism_permgroup",
    "automorphism_count",
    "group_isomorphic",
    "extends_to_automorphism",
    "elementary_abelian_rank",
    "gl_order",
]

# EOF

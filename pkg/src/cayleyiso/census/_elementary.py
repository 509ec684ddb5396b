#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/census/_elementary.py
"""K2PCI of elementary abelian 2-groups of rank 4 and 5 by reduction.

Rank 4: a connected bi-Cayley graph of valency 6 to 8 can be normalized
so that its connection set is ``T u T'`` with ``T = {1, a, b, c, d}`` and
``T'`` taken from a fixed list of twelve extensions. Each of the twelve
graphs is then checked directly.

Rank 5 is the stretch census over sizes 7 to 16.
"""

from __future__ import annotations

import logging

from .._config import RunConfig, resolve
from .._errors import BudgetExceededError, InvariantViolation, MalformedInputError
from ..ci import semiregular_search
from ..groups import FiniteGroup, GroupMap, named_group
from ..mcayley import build_bcay
from ._orbits import iso_class_partition, k_orbits_on_subsets

logger = logging.getLogger(__name__)

BASIS = ("a", "b", "c", "d")

# Extensions T' of T = {1, a, b, c, d}, as words in the basis.
RANK4_TAILS = (
    ("ab",),
    ("abc",),
    ("abcd",),
    ("ab", "ac"),
    ("ab", "bcd"),
    ("ab", "cd"),
    ("abc", "abd"),
    ("ab", "ac", "ad"),
    ("ab", "ac", "bc"),
    ("ab", "ac", "bd"),
    ("ab", "ac", "bcd"),
    ("abc", "abd", "acd"),
)


def _basis_change(g: FiniteGroup, source: list[int]) -> GroupMap:
    """Automorphism of ``Z2^k`` sending ``source[i]`` to the i-th named
    basis element."""
    target = [g.named[name] for name in BASIS[: len(source)]]
    images = [None] * g.order
    for mask in range(1 << len(source)):
        x = y = g.identity
        for i in range(len(source)):
            if mask >> i & 1:
                x = g.mul(x, source[i])
                y = g.mul(y, target[i])
        images[x] = y
    alpha = GroupMap(g, g, tuple(images))
    if None in images or not (alpha.is_bijective() and alpha.is_homomorphism()):
        raise InvariantViolation(f"{g.set_labels(source)} is not a basis of {g.name}")
    return alpha


def _independent(g: FiniteGroup, s) -> list[int]:
    """Greedy basis inside ``s``, scanning in index order."""
    basis, span = [], {g.identity}
    for x in sorted(s):
        if x not in span:
            basis.append(x)
            span = set(g.closure(basis))
    return basis


def _word(g: FiniteGroup, x: int) -> str:
    """``x`` as a word in the named basis (``"abd"``)."""
    for mask in range(1, 1 << len(BASIS)):
        y = g.identity
        for i, name in enumerate(BASIS):
            if mask >> i & 1:
                y = g.mul(y, g.named[name])
        if y == x:
            return "".join(name for i, name in enumerate(BASIS) if mask >> i & 1)
    return g.label(x)


def normal_form(g: FiniteGroup, s) -> tuple[GroupMap, tuple[str, ...]]:
    """``(alpha, T')`` with ``S^alpha = {1, a, b, c, d} u T'``; ``T'`` is
    returned as sorted basis words."""
    basis = _independent(g, set(s) - {g.identity})
    if len(basis) != len(BASIS):
        raise InvariantViolation(f"{g.set_labels(s)} does not generate {g.name}")
    alpha = _basis_change(g, basis)
    core = {g.identity} | {g.named[name] for name in BASIS}
    extra = alpha.apply_set(s) - core
    return alpha, tuple(sorted((_word(g, x) for x in extra), key=lambda w: (len(w), w)))


def rank4_classes(config: RunConfig | None = None, check_semiregular: bool = True) -> dict:
    """Reduce every connected ``BCay(Z2^4, S)`` of valency 6 to 8 to the
    twelve normal forms and check each one.

    Returns
    -------
    dict
        ``classes``: one row per ``Aut``-orbit with its normal form, the
        matched list entry and, if requested, the number of classes of
        same-orbit semiregular subgroups (1 means K2PCI).
        ``tails_matched``: the orbits and the list are in bijection.
        ``iso_classes``: canonical-form classes among the twelve graphs.

    Raises
    ------
    InvariantViolation
        If a list entry does not describe an admissible set.
    """
    cfg = resolve(config)
    g = named_group("Z2^4")
    index = k_orbits_on_subsets(
        g, range(6, 9), cfg, action="aut", contains_identity=True, generates=True
    )
    core = frozenset({g.identity} | {g.named[name] for name in BASIS})
    matched: dict[int, int] = {}
    for i, extension in enumerate(RANK4_TAILS):
        try:
            orbit = index.orbit_of(core | {g.parse_element(w) for w in extension})
        except MalformedInputError:
            raise InvariantViolation(f"extension {extension} is not admissible") from None
        matched.setdefault(id(orbit), i)
    rows = []
    for orbit in index.orbits:
        rep = orbit.representative
        _, extension = normal_form(g, rep)
        row = {
            "rep": g.set_labels(rep),
            "size": orbit.size,
            "orbit_size": orbit.orbit_size,
            "normal_form": list(extension),
            "tail": matched.get(id(orbit)),
        }
        if check_semiregular:
            search = semiregular_search(build_bcay(g, rep), True, cfg)
            row["semiregular_classes"] = search.class_count
        rows.append(row)
        logger.info("Z2^4 class %s: normal form %s", row["rep"], extension)
    partition = iso_class_partition(g, index.representatives(), cfg)
    report = {
        "group": g.name,
        "class_count": len(rows),
        "tails_size": len(RANK4_TAILS),
        "tails_matched": len(matched) == len(RANK4_TAILS) == len(rows),
        "iso_classes": len(partition),
        "classes": rows,
    }
    if check_semiregular:
        report["all_single_class"] = all(r["semiregular_classes"] == 1 for r in rows)
    return report


def rank5_census(config: RunConfig | None = None, sizes=range(7, 17)) -> dict:
    """Kernel-orbit representatives of connection sets of ``Z2^5`` that
    contain 1 and generate, split into isomorphism classes.

    Every class must be a single orbit for ``Z2^5`` to be K2PCI on these
    valencies.

    Raises
    ------
    BudgetExceededError
        Unless ``stretch_z2_5`` is set.
    """
    cfg = resolve(config)
    if not cfg.stretch_z2_5:
        raise BudgetExceededError("Z2^5 census (enable stretch_z2_5)", cfg.census_budget)
    g = named_group("Z2^5")
    index = k_orbits_on_subsets(g, sizes, cfg, contains_identity=True, generates=True)
    by_size = []
    for k in index.sizes:
        classes = iso_class_partition(g, index.representatives(k), cfg)
        merged = [[g.set_labels(s) for s in c] for c in classes if len(c) > 1]
        by_size.append(
            {"size": k, "orbits": len(index.representatives(k)), "classes": len(classes), "merged": merged}
        )
        logger.info("Z2^5 size %d: %d orbits, %d classes", k, by_size[-1]["orbits"], len(classes))
    return {
        "group": g.name,
        "path": index.path,
        "sizes": by_size,
        "all_singleton": all(not row["merged"] for row in by_size),
    }


__all__ = ["RANK4_TAILS", "normal_form", "rank4_classes", "rank5_census"]

# EOF

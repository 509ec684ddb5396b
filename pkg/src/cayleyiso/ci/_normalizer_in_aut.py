#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/ci/_normalizer_in_aut.py
"""The normalizer of R(G) inside Aut(Gamma).

Every element of ``N`` equals a reduced element ``(1, g_2, ..., g_m; 1;
alpha; sigma)`` followed by a right translation, so it is enough to find
the reduced elements that fix the symbol and add ``R(G)``.
"""

from __future__ import annotations

import itertools
import logging
import math

from .._config import RunConfig, resolve
from .._errors import BudgetExceededError, InvariantViolation
from ..groups import FiniteGroup, automorphism_group
from ..mcayley import MCayleyDigraph, NormalizerElement, apply_normalizer, right_regular
from ..perm import Permutation, PermGroup

logger = logging.getLogger(__name__)


def _translate_index(g: FiniteGroup, target: frozenset, side: str) -> dict:
    """``{c * T: [c, ...]}`` (side ``left``) or ``{T * c: [c, ...]}``."""
    index: dict[frozenset, list[int]] = {}
    for c in range(g.order):
        if side == "left":
            key = frozenset(g.mul(c, t) for t in target)
        else:
            key = frozenset(g.mul(t, c) for t in target)
        index.setdefault(key, []).append(c)
    return index


def _candidates(g, sym, alpha, sigma, j, cache) -> list[int]:
    """Values of ``g_j`` compatible with the entries linking parts 0 and j."""
    alpha_inv = alpha.inverse()
    out_set, in_set = sym.get(0, j), sym.get(j, 0)
    if out_set:
        # alpha(g_j^-1 S_0j) = T  <=>  alpha(S_0j) = alpha(g_j) T
        target = sym.get(sigma[0], sigma[j])
        if len(target) != len(out_set):
            return []
        key = ("left", target)
        if key not in cache:
            cache[key] = _translate_index(g, target, "left")
        return sorted(alpha_inv(c) for c in cache[key].get(alpha.apply_set(out_set), []))
    if in_set:
        # alpha(S_j0 g_j) = T  <=>  alpha(S_j0) = T alpha(g_j)^-1
        target = sym.get(sigma[j], sigma[0])
        if len(target) != len(in_set):
            return []
        key = ("right", target)
        if key not in cache:
            cache[key] = _translate_index(g, target, "right")
        return sorted(
            alpha_inv(g.inv(c)) for c in cache[key].get(alpha.apply_set(in_set), [])
        )
    if sym.get(sigma[0], sigma[j]) or sym.get(sigma[j], sigma[0]):
        return []
    return list(range(g.order))


def normalizer_elements(
    d: MCayleyDigraph, config: RunConfig | None = None
) -> tuple[list[NormalizerElement], int]:
    """Reduced elements of ``N`` (``g_1 = 1``, right part 1) fixing the
    symbol of ``d``.

    Returns
    -------
    elements : list of NormalizerElement
    checks : int
        Number of full symbol comparisons performed.

    Raises
    ------
    BudgetExceededError
        If ``|Aut(G)| * m! * |G|^(m-1)`` exceeds ``symbol_check_budget``.
    """
    cfg = resolve(config)
    g, sym, m = d.group, d.symbol, d.m
    auts = automorphism_group(g, cfg)
    planned = len(auts) * math.factorial(m) * g.order ** (m - 1)
    if planned > cfg.symbol_check_budget:
        raise BudgetExceededError("normalizer_in_aut symbol checks", cfg.symbol_check_budget, planned)
    sigmas = [Permutation(p) for p in itertools.permutations(range(m))]
    cache: dict = {}
    found: list[NormalizerElement] = []
    checks = 0
    for alpha in auts:
        for sigma in sigmas:
            if alpha.apply_set(sym.get(0, 0)) != sym.get(sigma[0], sigma[0]):
                continue
            columns = [_candidates(g, sym, alpha, sigma, j, cache) for j in range(1, m)]
            for rest in itertools.product(*columns):
                checks += 1
                elem = NormalizerElement(g, (g.identity, *rest), g.identity, alpha, sigma)
                if apply_normalizer(sym, elem) == sym:
                    found.append(elem)
    logger.debug(
        "normalizer_elements(%s, m=%d): %d reduced elements after %d checks",
        g.name,
        m,
        len(found),
        checks,
    )
    return found, checks


def normalizer_in_aut(d: MCayleyDigraph, config: RunConfig | None = None) -> PermGroup:
    """``N_Aut(Gamma)(R(G))`` as a permutation group on the vertices.

    Raises
    ------
    BudgetExceededError
        See :func:`normalizer_elements`.
    InvariantViolation
        If a found element is not an automorphism, or the group order is
        not ``|reduced elements| * |G|``.
    """
    found, _ = normalizer_elements(d, config)
    group = right_regular(d.group, d.m)
    for elem in found:
        perm = elem.to_permutation()
        if not d.preserved_by(perm):
            raise InvariantViolation("normalizer element does not preserve the digraph")
        if perm not in group:
            group = PermGroup(group.generators + [perm], degree=d.n_vertices)
    if group.order() != len(found) * d.group.order:
        raise InvariantViolation(
            f"|N_A(R(G))| = {group.order()} but {len(found)} reduced elements "
            f"times |G| = {d.group.order}"
        )
    logger.info("normalizer_in_aut(%s, m=%d): order %d", d.group.name, d.m, group.order())
    return group


def induced_on_parts(group: PermGroup, n: int, m: int) -> PermGroup:
    """Action of a part-permuting group on the ``m`` parts of size ``n``."""
    gens = []
    for p in group.generators:
        images = [p[i * n] // n for i in range(m)]
        gens.append(Permutation(images))
    return PermGroup(gens, degree=m)


def induces_full_symmetric(group: PermGroup, n: int, m: int) -> bool:
    return induced_on_parts(group, n, m).order() == math.factorial(m)


__all__ = [
    "normalizer_elements",
    "normalizer_in_aut",
    "induced_on_parts",
    "induces_full_symmetric",
]

# EOF

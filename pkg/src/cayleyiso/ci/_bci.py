#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/ci/_bci.py
"""Set-level tests on bi-Cayley connection sets.

``BCay(G, S)`` and ``BCay(G, T)`` are related by an element of the kernel
``K`` iff ``T = g^-1 S^alpha`` for some automorphism ``alpha`` and some
``g`` in ``G``; by an element of ``N`` iff additionally
``T = (S^-1)^alpha g`` is allowed.
"""

from __future__ import annotations

import logging

import numpy as np

from .._config import RunConfig, resolve
from .._errors import MalformedInputError
from ..groups import FiniteGroup, GroupMap, automorphism_group
from ..iso import ColoredDigraph, canonical, is_isomorphic
from ..mcayley import build_bcay

logger = logging.getLogger(__name__)


def bcay_canonical(g: FiniteGroup, s, config: RunConfig | None = None) -> bytes:
    """Canonical bytes of ``BCay(G, S)`` with the two parts exchangeable."""
    d = ColoredDigraph.from_mcayley(build_bcay(g, s))
    return canonical(d, "permutable", config).canonical_bytes


def _check_elements(g: FiniteGroup, s) -> frozenset:
    s = frozenset(s)
    bad = [x for x in s if not 0 <= x < g.order]
    if bad:
        raise MalformedInputError(f"elements {bad} are not in {g.name}")
    return s


def bci_condition3(
    g: FiniteGroup, s, config: RunConfig | None = None
) -> tuple[GroupMap, int] | None:
    """Some ``(alpha, c)`` with ``S^alpha = S^-1 c``, or None.

    Right translates of ``S^-1`` are hashed once; each automorphism then
    costs one lookup. Automorphisms are tried in sorted order and the
    least ``c`` is reported.
    """
    s = _check_elements(g, s)
    s_inv = [g.inv(x) for x in s]
    translates: dict[frozenset, int] = {}
    for c in range(g.order):
        translates.setdefault(frozenset(g.mul(x, c) for x in s_inv), c)
    for alpha in automorphism_group(g, resolve(config)):
        c = translates.get(alpha.apply_set(s))
        if c is not None:
            return alpha, c
    logger.debug("bci_condition3(%s, |S|=%d): no pair", g.name, len(s))
    return None


def family_witness(
    g: FiniteGroup, s, t, two_sided: bool, auts: list[GroupMap]
) -> dict | None:
    """Witness that ``T`` is a kernel (or normalizer) image of ``S``.

    Returns
    -------
    dict or None
        ``{"form": "left", "alpha": GroupMap, "g": int}`` for
        ``T = g^-1 S^alpha``; ``{"form": "right", ...}`` for
        ``T = (S^-1)^alpha g`` (only when ``two_sided``).
    """
    s, t = frozenset(s), frozenset(t)
    if len(s) != len(t):
        return None
    if not s:
        return {"form": "left", "alpha": auts[0], "g": g.identity}
    s_inv = frozenset(g.inv(x) for x in s)
    for alpha in auts:
        image = alpha.apply_set(s)
        anchor = g.inv(min(image))
        for target in sorted(t):
            x = g.mul(target, anchor)
            if frozenset(g.mul(x, y) for y in image) == t:
                return {"form": "left", "alpha": alpha, "g": g.inv(x)}
        if not two_sided:
            continue
        image = alpha.apply_set(s_inv)
        anchor = g.inv(min(image))
        for target in sorted(t):
            c = g.mul(anchor, target)
            if frozenset(g.mul(y, c) for y in image) == t:
                return {"form": "right", "alpha": alpha, "g": c}
    return None


def witness_to_json(g: FiniteGroup, witness: dict) -> dict:
    return {
        "form": witness["form"],
        "alpha": [g.label(a) for a in witness["alpha"].images],
        "g": g.label(witness["g"]),
    }


def fif_witness_sets(g: FiniteGroup, x: int, y: int, config: RunConfig | None = None) -> dict:
    """Compare ``BCay(G, {1, x})`` with ``BCay(G, {1, y})``.

    For ``x`` and ``y`` of the same order both graphs are disjoint unions
    of cycles of length ``2 |x|``, hence isomorphic; they are related by
    ``N`` only if some automorphism maps ``x`` to ``y`` or ``y^-1``.
    """
    cfg = resolve(config)
    s = frozenset({g.identity, x})
    t = frozenset({g.identity, y})
    auts = automorphism_group(g, cfg)
    fused = any(a(x) in (y, g.inv(y)) for a in auts)
    related = family_witness(g, s, t, True, auts) is not None
    return {
        "S": g.set_labels(s),
        "T": g.set_labels(t),
        "same_order": g.element_order(x) == g.element_order(y),
        "automorphism_fuses": fused,
        "isomorphic": bcay_canonical(g, s, cfg) == bcay_canonical(g, t, cfg),
        "normalizer_related": related,
    }


def index2_complete_bipartite(g: FiniteGroup, s, config: RunConfig | None = None) -> dict:
    """Both sides of ``BCay(G, S) ~ 2 K_{n/2,n/2}  <=>  S index-2 subgroup``.

    Raises
    ------
    MalformedInputError
        If ``1`` is not in ``S``.
    """
    s = _check_elements(g, s)
    if g.identity not in s:
        raise MalformedInputError("S must contain the identity")
    n = g.order
    subgroup = len(s) * 2 == n and g.closure(s) == s
    if n % 2:
        complete = False
    else:
        block = np.kron(np.eye(2, dtype=bool), np.ones((n // 2, n // 2), dtype=bool))
        adj = np.zeros((2 * n, 2 * n), dtype=bool)
        adj[:n, n:] = block
        adj[n:, :n] = block.T
        reference = ColoredDigraph.from_adjacency(adj)
        graph = ColoredDigraph.from_adjacency(build_bcay(g, s).adjacency)
        complete = is_isomorphic(graph, reference, "fixed", config)
    return {
        "S": g.set_labels(s),
        "complete_bipartite_pair": complete,
        "index2_subgroup": subgroup,
        "agree": complete == subgroup,
    }


__all__ = [
    "bcay_canonical",
    "bci_condition3",
    "family_witness",
    "witness_to_json",
    "fif_witness_sets",
    "index2_complete_bipartite",
]

# EOF

#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/mcayley/_bcay.py
"""Bi-Cayley helpers: connectivity, connection-set normal form, quotients."""

from __future__ import annotations

import logging

import networkx as nx

from .._errors import BudgetExceededError, InvariantViolation, MalformedInputError
from ..groups import (
    FiniteGroup,
    Subgroup,
    automorphism_generators,
    preimage,
    quotient_group,
)
from ._digraph import MCayleyDigraph, build_mcayley
from ._symbol import bcay_symbol

logger = logging.getLogger(__name__)


def build_bcay(g: FiniteGroup, s) -> MCayleyDigraph:
    """``BCay(G, S)`` as a 2-PCayley digraph."""
    return build_mcayley(g, bcay_symbol(g, s))


def is_connected_bcay(g: FiniteGroup, s) -> bool:
    """Connectivity of ``BCay(G, S)``.

    The algebraic answer (``<S S^-1> = G``) and a breadth-first search of
    the graph are both computed and must agree.

    Raises
    ------
    InvariantViolation
        If the two answers differ.
    """
    s = frozenset(s)
    if s:
        quotients = [g.mul(a, g.inv(b)) for a in s for b in s]
        algebraic = len(g.closure(quotients)) == g.order
    else:
        algebraic = False
    searched = nx.is_weakly_connected(build_bcay(g, s).to_networkx())
    if algebraic != searched:
        raise InvariantViolation(
            f"connectivity mismatch for {g.name} S={g.set_labels(s)}: "
            f"<SS^-1> says {algebraic}, BFS says {searched}"
        )
    return algebraic


def normalize_connection_set(g: FiniteGroup, s) -> frozenset:
    """Left-shift ``S`` by the inverse of its least element so it contains 1.

    Raises
    ------
    MalformedInputError
        If ``S`` is empty.
    """
    s = frozenset(s)
    if not s:
        raise MalformedInputError("cannot normalize an empty connection set")
    shift = g.inv(min(s))
    return frozenset(g.mul(shift, x) for x in s)


def quotient_bcay(
    g: FiniteGroup, h: Subgroup, s_bar
) -> tuple[MCayleyDigraph, MCayleyDigraph]:
    """``BCay(G, pi^-1(S_bar))`` and ``BCay(G/H, S_bar)``.

    The first is the lexicographic product of the second with
    ``|H| K_1``. ``h`` must be normal; whether it is characteristic is
    logged only.

    Raises
    ------
    NotNormalError
        If ``h`` is not normal in ``g``.
    """
    quotient, projection = quotient_group(g, h)
    s_bar = frozenset(s_bar)
    lifted = preimage(projection, s_bar)
    try:
        characteristic = all(h.image(a) == h for a in automorphism_generators(g))
    except BudgetExceededError:
        characteristic = None
    logger.info(
        "quotient_bcay(%s, |H|=%d): |S1|=%d characteristic=%s",
        g.name,
        h.order,
        len(lifted),
        characteristic,
    )
    return build_bcay(g, lifted), build_bcay(quotient, s_bar)


__all__ = [
    "build_bcay",
    "is_connected_bcay",
    "normalize_connection_set",
    "quotient_bcay",
]

# EOF

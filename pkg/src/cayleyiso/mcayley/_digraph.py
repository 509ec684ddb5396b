#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/mcayley/_digraph.py
"""m-Cayley digraphs as boolean adjacency matrices.

Vertex ``x_i`` (element ``x`` in part ``i``, both 0-based) has index
``i * |G| + x``. Arcs are ``(x_i, (s x)_j)`` for ``s`` in ``S_{i,j}``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import networkx as nx
import numpy as np

from .._errors import NotPartiteError
from ..groups import FiniteGroup
from ..perm import Permutation, PermGroup
from ._symbol import ConnectionSymbol

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MCayleyDigraph:
    """Digraph ``Cay(G, S_{i,j})`` with its part structure."""

    group: FiniteGroup = field(compare=False, repr=False)
    symbol: ConnectionSymbol
    adjacency: np.ndarray = field(compare=False, repr=False)

    @property
    def m(self) -> int:
        return self.symbol.m

    @property
    def n_vertices(self) -> int:
        return self.adjacency.shape[0]

    @property
    def parts(self) -> list[range]:
        n = self.group.order
        return [range(i * n, (i + 1) * n) for i in range(self.m)]

    def vertex(self, x: int, part: int) -> int:
        return part * self.group.order + x

    def colors(self) -> np.ndarray:
        """Part index of every vertex."""
        return np.repeat(np.arange(self.m), self.group.order)

    def arcs(self) -> list[tuple[int, int]]:
        rows, cols = np.nonzero(self.adjacency)
        return list(zip(rows.tolist(), cols.tolist()))

    def arc_count(self) -> int:
        return int(self.adjacency.sum())

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.adjacency, self.adjacency.T))

    def image_adjacency(self, perm: Permutation) -> np.ndarray:
        """Adjacency of the digraph relabelled by ``perm`` (``v -> perm(v)``)."""
        p = np.asarray(perm.images)
        out = np.zeros_like(self.adjacency)
        out[np.ix_(p, p)] = self.adjacency
        return out

    def preserved_by(self, perm: Permutation) -> bool:
        p = np.asarray(perm.images)
        return bool(np.array_equal(self.adjacency[np.ix_(p, p)], self.adjacency))

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        for v, part in enumerate(self.colors().tolist()):
            graph.add_node(v, part=part)
        graph.add_edges_from(self.arcs())
        return graph

    def to_json(self) -> dict:
        """Bit-exact adjacency export (rows as ``0``/``1`` strings)."""
        return {
            "group": self.group.name,
            "m": self.m,
            "n": self.group.order,
            "symbol": self.symbol.to_json(self.group),
            "adjacency": ["".join("1" if b else "0" for b in row) for row in self.adjacency],
        }


def build_mcayley(g: FiniteGroup, sym: ConnectionSymbol) -> MCayleyDigraph:
    """Build ``Cay(G, S_{i,j} : 1 <= i, j <= m)``.

    Raises
    ------
    MalformedInputError
        If the symbol references an element outside ``g``.
    """
    sym.validate(g)
    n = g.order
    adj = np.zeros((sym.m * n, sym.m * n), dtype=bool)
    sources = np.arange(n)
    for i, j, s in sym.entries():
        for x in s:
            adj[i * n + sources, j * n + g.table[x]] = True
    adj.setflags(write=False)
    logger.debug(
        "build_mcayley(%s, m=%d): %d vertices, %d arcs",
        g.name,
        sym.m,
        adj.shape[0],
        int(adj.sum()),
    )
    return MCayleyDigraph(g, sym, adj)


def digraph_to_json(d: MCayleyDigraph) -> dict:
    return d.to_json()


def right_translation(g: FiniteGroup, h: int, m: int) -> Permutation:
    """``R(h): x_i -> (x h)_i`` on ``m`` parts."""
    n = g.order
    right = g.right_mult(h)
    return Permutation._trusted(tuple(i * n + right[x] for i in range(m) for x in range(n)))


def right_regular(g: FiniteGroup, m: int) -> PermGroup:
    """``R(G)`` acting on the ``m * |G|`` vertices."""
    gens = [right_translation(g, h, m) for h in g.generating_sequence()]
    return PermGroup(gens, degree=m * g.order)


def bipartite_complement(d: MCayleyDigraph) -> MCayleyDigraph:
    """Complement every off-diagonal set of a 2-PCayley digraph.

    Raises
    ------
    NotPartiteError
        If ``d`` is not 2-PCayley.
    """
    if d.m != 2 or not d.symbol.is_partite():
        raise NotPartiteError("bipartite complement needs a 2-PCayley digraph")
    everything = frozenset(range(d.group.order))
    sym = ConnectionSymbol.from_mapping(
        2,
        {(0, 1): everything - d.symbol.get(0, 1), (1, 0): everything - d.symbol.get(1, 0)},
    )
    return build_mcayley(d.group, sym)


def lexicographic_blowup(d: MCayleyDigraph, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Adjacency and part colours of ``d[k K_1]``: each vertex becomes an
    independent set of size ``k`` joined like its parent."""
    adj = np.kron(d.adjacency, np.ones((k, k), dtype=bool)).astype(bool)
    return adj, np.repeat(d.colors(), k)


__all__ = [
    "MCayleyDigraph",
    "build_mcayley",
    "digraph_to_json",
    "right_translation",
    "right_regular",
    "bipartite_complement",
    "lexicographic_blowup",
]

# EOF

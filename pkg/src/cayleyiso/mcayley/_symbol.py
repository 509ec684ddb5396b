#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/mcayley/_symbol.py
"""Connection symbols: the m x m family of subsets that defines an
m-Cayley digraph, plus its text and JSON forms.

Parts are 0-based in code and 1-based in the text format::

    mcay m=2 n=4 group=Z4
    S 1 2 : 0,1
    S 2 1 : 0,3
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass

from .._errors import MalformedInputError
from ..groups import FiniteGroup, named_group

logger = logging.getLogger(__name__)

_HEADER_RE = re.compile(r"^mcay\s+m=(\d+)\s+n=(\d+)\s+group=(\S+)\s*$")
_LINE_RE = re.compile(r"^S\s+(\d+)\s+(\d+)\s*:\s*(.*)$")


@dataclass(frozen=True)
class ConnectionSymbol:
    """``sets[i][j]`` holds the element indices of ``S_{i,j}``."""

    m: int
    sets: tuple

    def __post_init__(self):
        if self.m < 1:
            raise MalformedInputError("symbol needs at least one part")
        if len(self.sets) != self.m or any(len(row) != self.m for row in self.sets):
            raise MalformedInputError(f"symbol is not {self.m}x{self.m}")

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def empty(cls, m: int) -> ConnectionSymbol:
        return cls(m, tuple(tuple(frozenset() for _ in range(m)) for _ in range(m)))

    @classmethod
    def from_mapping(cls, m: int, mapping: dict) -> ConnectionSymbol:
        """Build from ``{(i, j): iterable}``; missing entries are empty."""
        rows = [[frozenset() for _ in range(m)] for _ in range(m)]
        for (i, j), elements in mapping.items():
            if not (0 <= i < m and 0 <= j < m):
                raise MalformedInputError(f"part index ({i}, {j}) outside 0..{m - 1}")
            rows[i][j] = frozenset(int(x) for x in elements)
        return cls(m, tuple(tuple(r) for r in rows))

    def with_set(self, i: int, j: int, elements) -> ConnectionSymbol:
        rows = [list(r) for r in self.sets]
        rows[i][j] = frozenset(elements)
        return ConnectionSymbol(self.m, tuple(tuple(r) for r in rows))

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    def get(self, i: int, j: int) -> frozenset:
        return self.sets[i][j]

    def entries(self):
        """Nonempty ``(i, j, S_ij)`` in row-major order."""
        for i in range(self.m):
            for j in range(self.m):
                if self.sets[i][j]:
                    yield i, j, self.sets[i][j]

    def validate(self, g: FiniteGroup) -> None:
        """Raise if any set mentions an element outside ``g``."""
        for i, j, s in self.entries():
            bad = [x for x in s if not 0 <= x < g.order]
            if bad:
                raise MalformedInputError(
                    f"S[{i + 1},{j + 1}] references elements {bad} outside {g.name}"
                )

    def is_partite(self) -> bool:
        """All diagonal sets empty (m-PCayley)."""
        return all(not self.sets[i][i] for i in range(self.m))

    def is_undirected(self, g: FiniteGroup) -> bool:
        """``S_{j,i} = S_{i,j}^-1`` for all parts."""
        return all(
            self.sets[j][i] == frozenset(g.inv(x) for x in self.sets[i][j])
            for i in range(self.m)
            for j in range(self.m)
        )

    def is_bcay(self, g: FiniteGroup) -> bool:
        return self.m == 2 and self.is_partite() and self.is_undirected(g)

    def to_json(self, g: FiniteGroup) -> dict:
        return {
            "m": self.m,
            "group": g.name,
            "sets": [
                {"i": i + 1, "j": j + 1, "elements": g.set_labels(s)}
                for i, j, s in self.entries()
            ],
        }


# ----------------------------------------------------------------------
# Builders
# ----------------------------------------------------------------------


def bcay_symbol(g: FiniteGroup, s) -> ConnectionSymbol:
    """BCay(G, S): ``S_{1,2} = S``, ``S_{2,1} = S^-1``, empty diagonal."""
    s = frozenset(s)
    return ConnectionSymbol.from_mapping(2, {(0, 1): s, (1, 0): {g.inv(x) for x in s}})


def pad_symbol(sym: ConnectionSymbol, m_new: int) -> ConnectionSymbol:
    """Extend with empty rows and columns up to ``m_new`` parts."""
    if m_new < sym.m:
        raise MalformedInputError(f"cannot pad {sym.m} parts down to {m_new}")
    mapping = {(i, j): s for i, j, s in sym.entries()}
    return ConnectionSymbol.from_mapping(m_new, mapping)


# ----------------------------------------------------------------------
# Text format
# ----------------------------------------------------------------------


def symbol_to_text(g: FiniteGroup, sym: ConnectionSymbol) -> str:
    lines = [f"mcay m={sym.m} n={g.order} group={g.name}"]
    for i, j, s in sym.entries():
        lines.append(f"S {i + 1} {j + 1} : {','.join(g.set_labels(s))}")
    return "\n".join(lines) + "\n"


def symbol_from_text(text: str, g: FiniteGroup | None = None) -> tuple[FiniteGroup, ConnectionSymbol]:
    """Parse the digraph text format.

    The group is rebuilt from the header spec unless ``g`` is given.

    Raises
    ------
    MalformedInputError
        On a bad header, a bad line, or an order mismatch.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise MalformedInputError("empty symbol text")
    header = _HEADER_RE.match(lines[0])
    if header is None:
        raise MalformedInputError(f"bad symbol header: {lines[0]!r}")
    m, n, spec = int(header.group(1)), int(header.group(2)), header.group(3)
    g = named_group(spec) if g is None else g
    if g.order != n:
        raise MalformedInputError(f"header says n={n} but {g.name} has order {g.order}")
    mapping = {}
    for line in lines[1:]:
        match = _LINE_RE.match(line)
        if match is None:
            raise MalformedInputError(f"bad symbol line: {line!r}")
        i, j = int(match.group(1)) - 1, int(match.group(2)) - 1
        mapping[(i, j)] = g.parse_set(match.group(3))
    sym = ConnectionSymbol.from_mapping(m, mapping)
    logger.debug("Parsed %d-part symbol over %s", m, g.name)
    return g, sym


__all__ = [
    "ConnectionSymbol",
    "bcay_symbol",
    "pad_symbol",
    "symbol_to_text",
    "symbol_from_text",
]

# EOF

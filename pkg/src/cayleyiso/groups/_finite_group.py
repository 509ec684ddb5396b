#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/groups/_finite_group.py
"""Table-driven finite groups, element maps between them, and subgroups."""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field

import numpy as np

from .._errors import MalformedInputError
from ..perm import Permutation, parse_cycles

logger = logging.getLogger(__name__)

IDENTITY_ALIASES = ("1", "e", "Id", "id", "()", "Id(G)")
ASSOCIATIVITY_CHECK_MAX = 64


class FiniteGroup:
    """A finite group given by its multiplication table.

    Parameters
    ----------
    table : array_like of int, shape (n, n)
        ``table[a, b]`` is the index of the product ``a * b``.
    labels : sequence of str
        Unique display label per element.
    name : str
        Spec string the group was built from (e.g. ``"Z4xZ2"``).
    named : dict, optional
        Generator or element names usable in words (``"x"``, ``"e1"``).
    perm_degree : int, optional
        Set when labels are 1-based cycle notation of a permutation
        realization; enables parsing any cycle spelling.

    Raises
    ------
    MalformedInputError
        If the table is not a group table.
    """

    def __init__(
        self,
        table,
        labels,
        name: str = "",
        named: dict | None = None,
        perm_degree: int | None = None,
    ):
        table = np.asarray(table, dtype=np.int32)
        n = table.shape[0]
        if table.ndim != 2 or table.shape != (n, n) or n == 0:
            raise MalformedInputError("multiplication table must be square and nonempty")
        labels = [str(lab) for lab in labels]
        if len(labels) != n or len(set(labels)) != n:
            raise MalformedInputError("labels must be unique, one per element")
        table.setflags(write=False)
        self.table = table
        self.labels = tuple(labels)
        self.name = name or f"G{n}"
        self.perm_degree = perm_degree
        self._mul = table.tolist()
        self._validate()
        self.named = {k: int(v) for k, v in (named or {}).items()}
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self._orders: list[int] | None = None
        self._perms: dict | None = None
        self._aut_cache: tuple | None = None
        self._subgroup_cache: tuple | None = None

    # ------------------------------------------------------------------
    # Validation
    # ------------------------------------------------------------------

    def _validate(self) -> None:
        t = self.table
        n = t.shape[0]
        if t.min() < 0 or t.max() >= n:
            raise MalformedInputError("table entry out of range")
        full = np.arange(n)
        if not all(np.array_equal(np.sort(t[i]), full) for i in range(n)):
            raise MalformedInputError("table rows are not permutations")
        if not all(np.array_equal(np.sort(t[:, i]), full) for i in range(n)):
            raise MalformedInputError("table columns are not permutations")
        ids = [e for e in range(n) if np.array_equal(t[e], full)]
        if not ids or not np.array_equal(t[:, ids[0]], full):
            raise MalformedInputError("no two-sided identity")
        self.identity = ids[0]
        inverse = np.argmax(t == self.identity, axis=1)
        if not np.all(t[inverse, full] == self.identity):
            raise MalformedInputError("inverse law fails")
        self.inverse = inverse.astype(np.int32)
        self._inv = self.inverse.tolist()
        if n <= ASSOCIATIVITY_CHECK_MAX:
            if not np.array_equal(t[t, :], t[:, t]):
                raise MalformedInputError("table is not associative")

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def product(self, *elements: int) -> int:
        acc = self.identity
        for x in elements:
            acc = self._mul[acc][x]
        return acc

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self._inv[a], -k
        acc = self.identity
        for _ in range(k % self.element_order(a)):
            acc = self._mul[acc][a]
        return acc

    def conj(self, a: int, x: int) -> int:
        """``x^-1 a x``."""
        return self._mul[self._mul[self._inv[x]][a]][x]

    def element_order(self, a: int) -> int:
        return self.element_orders()[a]

    def element_orders(self) -> list[int]:
        if self._orders is None:
            orders = []
            for a in range(self.order):
                k, acc = 1, a
                while acc != self.identity:
                    acc = self._mul[acc][a]
                    k += 1
                orders.append(k)
            self._orders = orders
        return list(self._orders)

    def order_statistics(self) -> tuple:
        """Sorted multiset of element orders (a cheap isomorphism invariant)."""
        return tuple(sorted(self.element_orders()))

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def left_mult(self, h: int) -> list[int]:
        """Images of ``x -> h x``."""
        return list(self._mul[h])

    def right_mult(self, h: int) -> list[int]:
        """Images of ``x -> x h``."""
        return [self._mul[x][h] for x in range(self.order)]

    def closure(self, generators) -> frozenset:
        """Member set of the subgroup generated by ``generators``."""
        gens = [g for g in dict.fromkeys(generators) if g != self.identity]
        seen = {self.identity}
        queue = [self.identity]
        for x in queue:
            row = self._mul[x]
            for g in gens:
                y = row[g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def generating_sequence(self, members=None) -> list[int]:
        """Greedy generating sequence: repeatedly add an element of largest
        order not yet in the span (ties to the least index)."""
        target = frozenset(range(self.order)) if members is None else frozenset(members)
        orders = self.element_orders()
        gens: list[int] = []
        span = frozenset({self.identity})
        while span != target:
            best = max(
                (x for x in sorted(target) if x not in span),
                key=lambda x: (orders[x], -x),
            )
            gens.append(best)
            span = self.closure(gens)
        return gens

    # ------------------------------------------------------------------
    # Labels
    # ------------------------------------------------------------------

    def label(self, a: int) -> str:
        return self.labels[a]

    def set_labels(self, elements) -> list[str]:
        return [self.labels[a] for a in sorted(elements)]

    def parse_element(self, text: str) -> int:
        """Resolve a label, a named element, an identity alias, a word in
        the named elements (``xy^-1``, ``e1x``), or cycle notation.

        Raises
        ------
        MalformedInputError
            If nothing matches.
        """
        text = text.strip()
        if text in self._index:
            return self._index[text]
        if text in self.named:
            return self.named[text]
        if text in IDENTITY_ALIASES:
            return self.identity
        if text.startswith("(") and self.perm_degree is not None:
            return self._parse_cycle_label(text)
        word = self._parse_word(text)
        if word is not None:
            return word
        raise MalformedInputError(f"{text!r} is not an element of {self.name}")

    def parse_set(self, text: str) -> frozenset:
        """Comma-separated element list; empty string is the empty set."""
        items = [t for t in (s.strip() for s in text.split(",")) if t]
        return frozenset(self.parse_element(t) for t in items)

    def _parse_cycle_label(self, text: str) -> int:
        if self._perms is None:
            self._perms = {
                parse_cycles(lab, self.perm_degree, offset=1): i
                for i, lab in enumerate(self.labels)
            }
        p = parse_cycles(text, self.perm_degree, offset=1)
        if p not in self._perms:
            raise MalformedInputError(f"{text!r} is not an element of {self.name}")
        return self._perms[p]

    def _parse_word(self, text: str) -> int | None:
        if not self.named:
            return None
        names = sorted(self.named, key=len, reverse=True)
        token = re.compile(
            "(" + "|".join(re.escape(n) for n in names) + r")(?:\^\(?(-?\d+)\)?)?"
        )
        pos, acc = 0, self.identity
        compact = text.replace(" ", "").replace("*", "")
        while pos < len(compact):
            m = token.match(compact, pos)
            if m is None:
                return None
            exp = int(m.group(2)) if m.group(2) is not None else 1
            acc = self._mul[acc][self.power(self.named[m.group(1)], exp)]
            pos = m.end()
        return acc if compact else None

    # ------------------------------------------------------------------
    # Export
    # ------------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "identity": self.identity,
            "labels": list(self.labels),
            "table": self.table.tolist(),
        }

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


# ----------------------------------------------------------------------
# Maps
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class GroupMap:
    """Element map ``source -> target`` stored as an image tuple."""

    source: FiniteGroup = field(compare=False, repr=False)
    target: FiniteGroup = field(compare=False, repr=False)
    images: tuple

    def __call__(self, a: int) -> int:
        return self.images[a]

    def apply_set(self, elements) -> frozenset:
        return frozenset(self.images[a] for a in elements)

    def is_homomorphism(self) -> bool:
        s, t, img = self.source, self.target, self.images
        return all(
            img[s.mul(a, b)] == t.mul(img[a], img[b])
            for a in range(s.order)
            for b in range(s.order)
        )

    def is_bijective(self) -> bool:
        return len(set(self.images)) == self.target.order == self.source.order

    def then(self, other: GroupMap) -> GroupMap:
        """Apply ``self`` first, then ``other``."""
        return GroupMap(self.source, other.target, tuple(other.images[a] for a in self.images))

    def inverse(self) -> GroupMap:
        inv = [0] * len(self.images)
        for a, b in enumerate(self.images):
            inv[b] = a
        return GroupMap(self.target, self.source, tuple(inv))

    def is_identity(self) -> bool:
        return all(a == b for a, b in enumerate(self.images))

    def as_permutation(self) -> Permutation:
        return Permutation(self.images)

    @classmethod
    def identity_map(cls, g: FiniteGroup) -> GroupMap:
        return cls(g, g, tuple(range(g.order)))

    @classmethod
    def inversion(cls, g: FiniteGroup) -> GroupMap:
        """``x -> x^-1``; an automorphism iff ``g`` is abelian."""
        return cls(g, g, tuple(g.inv(a) for a in range(g.order)))

    @classmethod
    def inner(cls, g: FiniteGroup, x: int) -> GroupMap:
        """Conjugation ``a -> x^-1 a x``."""
        return cls(g, g, tuple(g.conj(a, x) for a in range(g.order)))

    def to_json(self) -> dict:
        return {
            "source": self.source.name,
            "target": self.target.name,
            "images": [self.target.label(b) for b in self.images],
        }


# ----------------------------------------------------------------------
# Subgroups
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class Subgroup:
    """A subgroup recorded by its sorted member indices."""

    parent: FiniteGroup = field(compare=False, repr=False)
    members: tuple

    @classmethod
    def generated_by(cls, g: FiniteGroup, generators) -> Subgroup:
        return cls(g, tuple(sorted(g.closure(generators))))

    @classmethod
    def from_members(cls, g: FiniteGroup, members) -> Subgroup:
        members = frozenset(members)
        if g.identity not in members or g.closure(members) != members:
            raise MalformedInputError("member set is not a subgroup")
        return cls(g, tuple(sorted(members)))

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // len(self.members)

    def member_set(self) -> frozenset:
        return frozenset(self.members)

    def __contains__(self, a: int) -> bool:
        return a in self.member_set()

    def is_normal(self) -> bool:
        g, mem = self.parent, self.member_set()
        return all(g.conj(h, x) in mem for x in range(g.order) for h in self.members)

    def image(self, alpha: GroupMap) -> Subgroup:
        return Subgroup(self.parent, tuple(sorted(alpha.apply_set(self.members))))

    def as_group(self) -> tuple[FiniteGroup, list[int]]:
        """Restrict the parent table; returns ``(group, embedding)``."""
        g = self.parent
        pos = {a: i for i, a in enumerate(self.members)}
        table = [[pos[g.mul(a, b)] for b in self.members] for a in self.members]
        labels = [g.label(a) for a in self.members]
        named = {k: pos[v] for k, v in g.named.items() if v in pos}
        sub = FiniteGroup(
            table,
            labels,
            name=f"{g.name}[{len(self.members)}]",
            named=named,
            perm_degree=g.perm_degree,
        )
        return sub, list(self.members)

    def labels(self) -> list[str]:
        return [self.parent.label(a) for a in self.members]


__all__ = ["FiniteGroup", "GroupMap", "Subgroup", "IDENTITY_ALIASES"]

# EOF

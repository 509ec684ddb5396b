#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/perm/_permutation.py
"""Immutable permutations of dense 0-based point sets.

Products are read left to right: ``a * b`` applies ``a`` first, then ``b``.
Conjugation follows the same convention, ``h ** x == x**-1 * h * x``.
"""

from __future__ import annotations

import math
import re

from .._errors import MalformedInputError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    """A bijection on ``{0, ..., degree-1}`` stored as an image tuple."""

    __slots__ = ("_img", "_hash")

    def __init__(self, images):
        img = tuple(int(i) for i in images)
        if sorted(img) != list(range(len(img))):
            raise MalformedInputError(f"not a permutation: {list(img)}")
        self._img = img
        self._hash = hash(img)

    @classmethod
    def _trusted(cls, img: tuple) -> Permutation:
        p = cls.__new__(cls)
        p._img = img
        p._hash = hash(img)
        return p

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles) -> Permutation:
        """Build from an iterable of cycles given as point sequences."""
        img = list(range(degree))
        seen = set()
        for cycle in cycles:
            cycle = [int(c) for c in cycle]
            for a in cycle:
                if a in seen or not 0 <= a < degree:
                    raise MalformedInputError(
                        f"bad point {a} in cycles for degree {degree}"
                    )
                seen.add(a)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                img[a] = b
        return cls._trusted(tuple(img))

    # ------------------------------------------------------------------
    # Basic protocol
    # ------------------------------------------------------------------

    @property
    def images(self) -> tuple:
        return self._img

    @property
    def degree(self) -> int:
        return len(self._img)

    def __call__(self, point: int) -> int:
        return self._img[point]

    def __getitem__(self, point: int) -> int:
        return self._img[point]

    def __len__(self) -> int:
        return len(self._img)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._img == other._img

    def __lt__(self, other: Permutation) -> bool:
        return self._img < other._img

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()})"

    def __mul__(self, other: Permutation) -> Permutation:
        if len(other._img) != len(self._img):
            raise MalformedInputError("degree mismatch in product")
        o = other._img
        return Permutation._trusted(tuple(o[i] for i in self._img))

    def __invert__(self) -> Permutation:
        return self.inverse()

    def __pow__(self, exp) -> Permutation:
        if isinstance(exp, Permutation):
            return exp.inverse() * self * exp
        result = Permutation.identity(self.degree)
        base = self if exp >= 0 else self.inverse()
        n = abs(int(exp))
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> Permutation:
        inv = [0] * len(self._img)
        for i, j in enumerate(self._img):
            inv[j] = i
        return Permutation._trusted(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self._img))

    # ------------------------------------------------------------------
    # Structure
    # ------------------------------------------------------------------

    def cycles(self, include_fixed: bool = False) -> list[tuple]:
        """Disjoint cycles, each starting at its least point, sorted."""
        seen = [False] * len(self._img)
        out = []
        for start in range(len(self._img)):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            nxt = self._img[start]
            while nxt != start:
                cycle.append(nxt)
                seen[nxt] = True
                nxt = self._img[nxt]
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    def cycle_type(self) -> tuple:
        """Sorted cycle lengths including fixed points."""
        return tuple(sorted(len(c) for c in self.cycles(include_fixed=True)))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def fixed_points(self) -> list[int]:
        return [i for i, j in enumerate(self._img) if i == j]

    def support(self) -> list[int]:
        return [i for i, j in enumerate(self._img) if i != j]

    def is_uniform(self, length: int) -> bool:
        """True iff every cycle (fixed points included) has ``length`` points."""
        return all(len(c) == length for c in self.cycles(include_fixed=True))

    def cycle_string(self, offset: int = 0, sep: str = " ") -> str:
        """Cycle notation; ``offset=1`` prints 1-based points."""
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join(
            "(" + sep.join(str(p + offset) for p in c) + ")" for c in cycles
        )

    def to_json(self) -> dict:
        return {"deg": self.degree, "img": list(self._img)}

    @classmethod
    def from_json(cls, data: dict) -> Permutation:
        img = data["img"]
        if len(img) != data["deg"]:
            raise MalformedInputError("image length does not match declared degree")
        return cls(img)


def parse_cycles(text: str, degree: int, offset: int = 0) -> Permutation:
    """Parse cycle notation such as ``(0 1 2)(3 4)`` or ``(13245)``.

    Points inside a cycle are separated by whitespace or commas; a cycle
    without separators is read digit by digit (single-digit points).
    ``offset=1`` reads 1-based points. ``()``, ``e`` and ``Id`` denote the
    identity.
    """
    text = text.strip()
    if text in ("", "()", "e", "Id", "1"):
        return Permutation.identity(degree)
    cycles = []
    consumed = "".join(_CYCLE_RE.findall(text))
    if not consumed and text:
        raise MalformedInputError(f"not cycle notation: {text!r}")
    if _CYCLE_RE.sub("", text).strip():
        raise MalformedInputError(f"stray characters in cycle notation: {text!r}")
    for body in _CYCLE_RE.findall(text):
        body = body.strip()
        if not body:
            continue
        if re.search(r"[\s,]", body):
            tokens = [t for t in re.split(r"[\s,]+", body) if t]
        else:
            tokens = list(body)
        try:
            cycles.append([int(t) - offset for t in tokens])
        except ValueError:
            raise MalformedInputError(f"non-numeric point in {text!r}") from None
    return Permutation.from_cycles(degree, cycles)


__all__ = ["Permutation", "parse_cycles"]

# EOF

#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/groups/_named.py
"""Named group constructors and the group spec mini-language.

Spec grammar::

    spec    := factor ("x" factor)*
    factor  := "Z" n ["^" k] | "D" 2n | "Q8" | "Dic" 4n | "A" n | "S" n
             | "F8" | "G18" | "1"

Labels per family:

- abelian groups: integers for cyclic groups, dotted exponent vectors
  (``1.0.1``) otherwise; basis names ``x`` (cyclic) or ``a, b, c, ...``
- dihedral ``r^i s^j``, dicyclic ``x^i y^j``, G18 ``e1^a e2^b x^t``
- Q8: ``1 -1 i -i j -j k -k``
- permutation groups (A_n, S_n, F8): 1-based cycle notation, ``()`` for
  the identity
"""

from __future__ import annotations

import itertools
import logging
import re

from .._errors import GroupSpecError
from ..perm import Permutation, parse_cycles
from ._finite_group import FiniteGroup

logger = logging.getLogger(__name__)

_BASIS_NAMES = "abcdefgh"

# Generators of F8 = Z2^3 : Z7 on points 1..8.
F8_GENERATORS = {
    "x": "(2687453)",
    "y": "(13)(24)(57)(68)",
    "z": "(12)(34)(56)(78)",
    "t": "(15)(26)(37)(48)",
}


# ----------------------------------------------------------------------
# Generic builders
# ----------------------------------------------------------------------


def from_multiplication(elements, mul, labels, name, named=None) -> FiniteGroup:
    """Build a table from hashable normal forms and a product function."""
    elements = list(elements)
    pos = {e: i for i, e in enumerate(elements)}
    table = [[pos[mul(a, b)] for b in elements] for a in elements]
    named_idx = {k: pos[v] for k, v in (named or {}).items()}
    return FiniteGroup(table, labels, name=name, named=named_idx)


def from_permutations(generators: dict, degree: int, name: str) -> FiniteGroup:
    """Group generated by named permutations given in 1-based cycle notation.

    Elements are listed breadth-first from the identity, following the
    generators in the given order.
    """
    gens = {k: parse_cycles(v, degree, offset=1) for k, v in generators.items()}
    identity = Permutation.identity(degree)
    seen = {identity: 0}
    elements = [identity]
    for p in elements:
        for g in gens.values():
            q = p * g
            if q not in seen:
                seen[q] = len(elements)
                elements.append(q)
    table = [[seen[a * b] for b in elements] for a in elements]
    labels = [p.cycle_string(offset=1, sep="") for p in elements]
    named = {k: seen[g] for k, g in gens.items()}
    return FiniteGroup(table, labels, name=name, named=named, perm_degree=degree)


# ----------------------------------------------------------------------
# Families
# ----------------------------------------------------------------------


def abelian(invariants, name: str | None = None) -> FiniteGroup:
    """Direct product of cyclic groups with exponent-vector labels."""
    invariants = [int(n) for n in invariants]
    if not invariants or any(n < 1 for n in invariants):
        raise GroupSpecError(f"bad abelian invariants {invariants}")
    if name is None:
        name = "x".join(f"Z{n}" for n in invariants)
    elements = list(itertools.product(*(range(n) for n in invariants)))

    def mul(a, b):
        return tuple((x + y) % n for x, y, n in zip(a, b, invariants))

    if len(invariants) == 1:
        labels = [str(e[0]) for e in elements]
        named = {"x": (1 % invariants[0],)}
    else:
        labels = [".".join(map(str, e)) for e in elements]
        named = {}
        for i in range(min(len(invariants), len(_BASIS_NAMES))):
            vec = [0] * len(invariants)
            vec[i] = 1 % invariants[i]
            named[_BASIS_NAMES[i]] = tuple(vec)
    g = from_multiplication(elements, mul, labels, name, named)
    g.invariants = tuple(invariants)
    return g


def cyclic(n: int) -> FiniteGroup:
    return abelian([n], name=f"Z{n}")


def dihedral(order: int) -> FiniteGroup:
    """D_order = <r, s | r^n = s^2 = 1, s r s = r^-1>, order = 2n."""
    if order < 2 or order % 2:
        raise GroupSpecError(f"dihedral order must be even: D{order}")
    n = order // 2
    elements = [(i, j) for j in range(2) for i in range(n)]

    def mul(a, b):
        (i, j), (k, l) = a, b
        return ((i + (-1) ** j * k) % n, (j + l) % 2)

    labels = [_word([("r", i, n), ("s", j, 2)]) for i, j in elements]
    return from_multiplication(
        elements, mul, labels, f"D{order}", {"r": (1 % n, 0), "s": (0, 1)}
    )


def dicyclic(order: int) -> FiniteGroup:
    """Dic_order = <x, y | x^2n = 1, y^2 = x^n, y^-1 x y = x^-1>, order 4n."""
    if order < 4 or order % 4:
        raise GroupSpecError(f"dicyclic order must be a multiple of 4: Dic{order}")
    n = order // 4
    elements = [(i, j) for j in range(2) for i in range(2 * n)]

    def mul(a, b):
        (i, j), (k, l) = a, b
        exp = i + (-1) ** j * k
        if j + l == 2:
            return ((exp + n) % (2 * n), 0)
        return (exp % (2 * n), j + l)

    labels = [_word([("x", i, 2 * n), ("y", j, 2)]) for i, j in elements]
    return from_multiplication(elements, mul, labels, f"Dic{order}", {"x": (1, 0), "y": (0, 1)})


def quaternion() -> FiniteGroup:
    """Q8 with elements ±1, ±i, ±j, ±k."""
    units = ["1", "i", "j", "k"]
    # unit products: (sign, unit)
    unit_mul = {
        ("1", u): (1, u) for u in units
    } | {(u, "1"): (1, u) for u in units}
    unit_mul |= {
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    }
    elements = [(s, u) for u in units for s in (1, -1)]

    def mul(a, b):
        sign, unit = unit_mul[(a[1], b[1])]
        return (a[0] * b[0] * sign, unit)

    labels = [u if s == 1 else f"-{u}" for s, u in elements]
    named = {"i": (1, "i"), "j": (1, "j"), "k": (1, "k")}
    return from_multiplication(elements, mul, labels, "Q8", named)


def generalized_dihedral_18() -> FiniteGroup:
    """G18 = <e1, e2, x | e1^3 = e2^3 = x^2 = [e1, e2] = 1, e_i^x = e_i^-1>."""
    elements = [(a, b, t) for t in range(2) for b in range(3) for a in range(3)]

    def mul(p, q):
        (a, b, t), (c, d, u) = p, q
        s = (-1) ** t
        return ((a + s * c) % 3, (b + s * d) % 3, (t + u) % 2)

    labels = [_word([("e1", a, 3), ("e2", b, 3), ("x", t, 2)]) for a, b, t in elements]
    named = {"e1": (1, 0, 0), "e2": (0, 1, 0), "x": (0, 0, 1)}
    return from_multiplication(elements, mul, labels, "G18", named)


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 6:
        raise GroupSpecError(f"S{n} outside the supported range 1..6")
    if n == 1:
        return trivial(name="S1")
    gens = {"t": "(12)", "c": "(" + "".join(str(i) for i in range(1, n + 1)) + ")"}
    return from_permutations(gens, n, f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if not 3 <= n <= 6:
        raise GroupSpecError(f"A{n} outside the supported range 3..6")
    gens = {"u": "(123)"}
    if n == 4:
        gens["v"] = "(12)(34)"
    elif n == 5:
        gens["v"] = "(12345)"
    elif n == 6:
        gens["v"] = "(23456)"
    return from_permutations(gens, n, f"A{n}")


def frobenius_56() -> FiniteGroup:
    return from_permutations(F8_GENERATORS, 8, "F8")


def trivial(name: str = "1") -> FiniteGroup:
    return FiniteGroup([[0]], ["1"], name=name)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """``g x h`` with labels ``<a>.<b>``; abelian factors merge into one
    exponent-vector group."""
    gi, hi = getattr(g, "invariants", None), getattr(h, "invariants", None)
    if gi is not None and hi is not None:
        return abelian(list(gi) + list(hi), name=f"{g.name}x{h.name}")
    elements = [(a, b) for a in range(g.order) for b in range(h.order)]

    def mul(p, q):
        return (g.mul(p[0], q[0]), h.mul(p[1], q[1]))

    labels = [f"{g.label(a)}.{h.label(b)}" for a, b in elements]
    named = {k: (v, h.identity) for k, v in g.named.items()}
    for k, v in h.named.items():
        named.setdefault(k, (g.identity, v))
    return from_multiplication(elements, mul, labels, f"{g.name}x{h.name}", named)


# ----------------------------------------------------------------------
# Spec parser
# ----------------------------------------------------------------------

_FACTOR_RE = re.compile(
    r"^(?:(?P<z>Z)(?P<zn>\d+)(?:\^(?P<zk>\d+))?"
    r"|(?P<dic>Dic)(?P<dicn>\d+)"
    r"|(?P<d>D)(?P<dn>\d+)"
    r"|(?P<q>Q8)"
    r"|(?P<a>A)(?P<an>\d+)"
    r"|(?P<s>S)(?P<sn>\d+)"
    r"|(?P<f>F8)"
    r"|(?P<g>G18)"
    r"|(?P<one>1))$"
)


def _factor(text: str) -> FiniteGroup:
    m = _FACTOR_RE.match(text)
    if m is None:
        raise GroupSpecError(f"unknown group spec {text!r}")
    if m.group("z"):
        n, k = int(m.group("zn")), int(m.group("zk") or 1)
        if n < 1 or k < 1:
            raise GroupSpecError(f"bad cyclic spec {text!r}")
        if k == 1:
            return cyclic(n)
        return abelian([n] * k, name=text)
    if m.group("dic"):
        return dicyclic(int(m.group("dicn")))
    if m.group("d"):
        return dihedral(int(m.group("dn")))
    if m.group("q"):
        return quaternion()
    if m.group("a"):
        return alternating(int(m.group("an")))
    if m.group("s"):
        return symmetric(int(m.group("sn")))
    if m.group("f"):
        return frobenius_56()
    if m.group("g"):
        return generalized_dihedral_18()
    return trivial()


def named_group(spec: str) -> FiniteGroup:
    """Build the group described by ``spec``.

    Parameters
    ----------
    spec : str
        e.g. ``"Z9"``, ``"Z2^4"``, ``"D8"``, ``"Dic12"``, ``"Q8xZ2"``.

    Returns
    -------
    FiniteGroup

    Raises
    ------
    GroupSpecError
        If the spec does not parse.
    """
    spec = spec.strip().replace(" ", "").replace("×", "x")
    if not spec:
        raise GroupSpecError("empty group spec")
    factors = [_factor(part) for part in spec.split("x")]
    group = factors[0]
    for f in factors[1:]:
        group = direct_product(group, f)
    group.name = spec
    logger.debug("named_group(%s): order %d", spec, group.order)
    return group


def _word(parts) -> str:
    out = []
    for name, exp, mod in parts:
        if exp % mod == 0:
            continue
        out.append(name if exp == 1 else f"{name}^{exp}")
    return "".join(out) or "1"


__all__ = [
    "named_group",
    "abelian",
    "cyclic",
    "dihedral",
    "dicyclic",
    "quaternion",
    "generalized_dihedral_18",
    "symmetric",
    "alternating",
    "frobenius_56",
    "trivial",
    "direct_product",
    "from_multiplication",
    "from_permutations",
    "F8_GENERATORS",
]

# EOF

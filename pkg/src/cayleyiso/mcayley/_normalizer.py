#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/mcayley/_normalizer.py
"""The normalizer N of R(G) in Sym(V) and its kernel K, in factored form.

An element of ``N`` is ``(g_1, ..., g_m; g; alpha; sigma)`` and maps

    x_i  ->  ((g_i^-1 x g)^alpha)_{sigma(i)}

It sends the digraph of a symbol ``S`` to the digraph of ``T`` with

    T_{sigma(i), sigma(j)} = (g_j^-1 S_{i,j} g_i)^alpha
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field

import numpy as np

from .._config import RunConfig, resolve
from .._errors import MalformedInputError
from ..groups import FiniteGroup, GroupMap, automorphism_generators, automorphism_permgroup
from ..perm import Permutation, PermGroup
from ._digraph import MCayleyDigraph, build_mcayley, right_translation
from ._symbol import ConnectionSymbol

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NormalizerElement:
    """Factored element of ``N = (L_1 x ... x L_m) : (S_m x Aut(G))``."""

    group: FiniteGroup = field(compare=False, repr=False)
    translations: tuple
    right: int
    alpha: GroupMap
    sigma: Permutation

    def __post_init__(self):
        if len(self.translations) != self.sigma.degree:
            raise MalformedInputError("one translation per part is required")

    @property
    def m(self) -> int:
        return self.sigma.degree

    @classmethod
    def identity(cls, g: FiniteGroup, m: int) -> NormalizerElement:
        return cls(
            g,
            (g.identity,) * m,
            g.identity,
            GroupMap.identity_map(g),
            Permutation.identity(m),
        )

    @classmethod
    def random(cls, g: FiniteGroup, m: int, auts: PermGroup, rng: random.Random):
        """Uniform element; ``auts`` is ``Aut(G)`` acting on element indices."""
        perm = list(range(m))
        rng.shuffle(perm)
        return cls(
            g,
            tuple(rng.randrange(g.order) for _ in range(m)),
            rng.randrange(g.order),
            GroupMap(g, g, auts.random_element(rng).images),
            Permutation(perm),
        )

    def is_kernel(self) -> bool:
        return self.sigma.is_identity()

    def element_image(self, part: int, x: int) -> int:
        g = self.group
        return self.alpha(g.product(g.inv(self.translations[part]), x, self.right))

    def to_permutation(self) -> Permutation:
        """The vertex permutation on ``m * |G|`` points."""
        n = self.group.order
        images = [0] * (self.m * n)
        for i in range(self.m):
            target = self.sigma[i] * n
            for x in range(n):
                images[i * n + x] = target + self.element_image(i, x)
        return Permutation._trusted(tuple(images))

    def reduced(self) -> NormalizerElement:
        """Equivalent element with ``g_1 = 1``.

        Uses ``g_i^-1 x g = g_1^-1 (h_i^-1 x g') g_1`` with
        ``h_i = g_i g_1^-1`` and ``g' = g g_1^-1``, so the conjugation by
        ``g_1`` moves into the automorphism.
        """
        g = self.group
        g1 = self.translations[0]
        if g1 == g.identity:
            return self
        g1_inv = g.inv(g1)
        return NormalizerElement(
            g,
            tuple(g.mul(t, g1_inv) for t in self.translations),
            g.mul(self.right, g1_inv),
            GroupMap.inner(g, g1).then(self.alpha),
            self.sigma,
        )

    def to_json(self) -> dict:
        g = self.group
        return {
            "translations": [g.label(t) for t in self.translations],
            "right": g.label(self.right),
            "alpha": [g.label(a) for a in self.alpha.images],
            "sigma": [s + 1 for s in self.sigma.images],
        }


def apply_normalizer(sym: ConnectionSymbol, n: NormalizerElement) -> ConnectionSymbol:
    """Symbol of the image digraph under ``n``."""
    if sym.m != n.m:
        raise MalformedInputError(f"symbol has {sym.m} parts, element acts on {n.m}")
    g, alpha, sigma = n.group, n.alpha, n.sigma
    mapping = {}
    for i, j, s in sym.entries():
        gi, gj_inv = n.translations[i], g.inv(n.translations[j])
        mapping[(sigma[i], sigma[j])] = {alpha(g.product(gj_inv, x, gi)) for x in s}
    return ConnectionSymbol.from_mapping(sym.m, mapping)


# ----------------------------------------------------------------------
# Generators of N and K
# ----------------------------------------------------------------------


def left_translation(g: FiniteGroup, h: int, part: int, m: int) -> NormalizerElement:
    """``L_part(h)``: ``x_part -> (h^-1 x)_part``, identity elsewhere."""
    trans = [g.identity] * m
    trans[part] = h
    return NormalizerElement(g, tuple(trans), g.identity, GroupMap.identity_map(g), Permutation.identity(m))


def automorphism_element(g: FiniteGroup, alpha: GroupMap, m: int) -> NormalizerElement:
    return NormalizerElement(g, (g.identity,) * m, g.identity, alpha, Permutation.identity(m))


def part_permutation(g: FiniteGroup, sigma: Permutation) -> NormalizerElement:
    m = sigma.degree
    return NormalizerElement(g, (g.identity,) * m, g.identity, GroupMap.identity_map(g), sigma)


def inversion_swap(g: FiniteGroup) -> NormalizerElement:
    """``iota: x_1 -> (x^-1)_2, x_2 -> (x^-1)_1`` for abelian ``g``.

    Raises
    ------
    MalformedInputError
        If ``g`` is not abelian (inversion is then no automorphism).
    """
    if not g.is_abelian():
        raise MalformedInputError(f"{g.name} is not abelian")
    return NormalizerElement(
        g, (g.identity,) * 2, g.identity, GroupMap.inversion(g), Permutation([1, 0])
    )


def _sigma_generators(m: int) -> list[Permutation]:
    gens = []
    if m >= 2:
        gens.append(Permutation([1, 0] + list(range(2, m))))
    if m >= 3:
        gens.append(Permutation(list(range(1, m)) + [0]))
    return gens


def normalizer_and_kernel(
    g: FiniteGroup, m: int, config: RunConfig | None = None
) -> tuple[PermGroup, PermGroup, PermGroup]:
    """Build ``N``, ``K`` and the stabilizer of vertex ``(1_G)_1`` in ``K``.

    Returns
    -------
    N, K, K_point_stab : PermGroup
        Orders ``m! |Aut(G)| |G|^m``, ``|Aut(G)| |G|^m`` and
        ``|Aut(G)| |G|^(m-1)``.
    """
    degree = m * g.order
    h_gens = g.generating_sequence()
    lefts = [[left_translation(g, h, i, m).to_permutation() for h in h_gens] for i in range(m)]
    auts = [automorphism_element(g, a, m).to_permutation() for a in automorphism_generators(g, config)]
    rights = [right_translation(g, h, m) for h in h_gens]
    sigmas = [part_permutation(g, s).to_permutation() for s in _sigma_generators(m)]
    all_lefts = [p for row in lefts for p in row]
    stab_lefts = [p for row in lefts[1:] for p in row]
    big_n = PermGroup(all_lefts + auts + rights + sigmas, degree=degree)
    big_k = PermGroup(all_lefts + auts + rights, degree=degree)
    k_stab = PermGroup(stab_lefts + auts, degree=degree)
    logger.info(
        "normalizer_and_kernel(%s, m=%d): |N|=%d |K|=%d",
        g.name,
        m,
        big_n.order(),
        big_k.order(),
    )
    return big_n, big_k, k_stab


# ----------------------------------------------------------------------
# Seeded spot-checks
# ----------------------------------------------------------------------


def random_normalizer_elements(
    g: FiniteGroup, m: int, count: int, config: RunConfig | None = None
) -> list[NormalizerElement]:
    """``count`` uniform elements of ``N`` drawn from ``random.Random(config.seed)``."""
    cfg = resolve(config)
    rng = random.Random(cfg.seed)
    auts = automorphism_permgroup(g, cfg)
    return [NormalizerElement.random(g, m, auts, rng) for _ in range(count)]


def check_symbol_images(
    d: MCayleyDigraph, count: int = 100, config: RunConfig | None = None
) -> list[NormalizerElement]:
    """Seeded random elements ``n`` of ``N`` whose symbol image disagrees
    with the vertex image of ``d``.

    The digraph of ``apply_normalizer(d.symbol, n)`` must equal ``d``
    relabelled by ``n.to_permutation()``, bit for bit; an empty list
    means every sample agreed.
    """
    bad = []
    for n in random_normalizer_elements(d.group, d.m, count, config):
        image = build_mcayley(d.group, apply_normalizer(d.symbol, n))
        if not np.array_equal(d.image_adjacency(n.to_permutation()), image.adjacency):
            bad.append(n)
    logger.info(
        "check_symbol_images(%s, m=%d): %d samples, %d mismatches",
        d.group.name,
        d.m,
        count,
        len(bad),
    )
    return bad


__all__ = [
    "NormalizerElement",
    "apply_normalizer",
    "left_translation",
    "automorphism_element",
    "part_permutation",
    "inversion_swap",
    "normalizer_and_kernel",
    "random_normalizer_elements",
    "check_symbol_images",
]

# EOF

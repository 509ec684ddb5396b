#!/usr/bin/env python3
"""Tests for cayleyiso.mcayley: symbols, digraphs, the normalizer N and kernel K."""

import itertools
import random

import numpy as np
import pytest

from cayleyiso import MalformedInputError, NotNormalError, NotPartiteError, RunConfig
from cayleyiso.groups import Subgroup, named_group
from cayleyiso.iso import ColoredDigraph, is_isomorphic
from cayleyiso.mcayley import (
    ConnectionSymbol,
    NormalizerElement,
    apply_normalizer,
    bcay_symbol,
    bipartite_complement,
    build_bcay,
    build_mcayley,
    check_symbol_images,
    inversion_swap,
    is_connected_bcay,
    left_translation,
    lexicographic_blowup,
    normalize_connection_set,
    normalizer_and_kernel,
    pad_symbol,
    part_permutation,
    quotient_bcay,
    random_normalizer_elements,
    right_regular,
    right_translation,
    symbol_from_text,
    symbol_to_text,
)
from cayleyiso.perm import Permutation

# ---------------------------------------------------------------------------
# Symbols
# ---------------------------------------------------------------------------


def test_bcay_symbol_shape(z4):
    sym = bcay_symbol(z4, {0, 1})
    assert sym.m == 2
    assert sym.get(0, 1) == frozenset({0, 1})
    assert sym.get(1, 0) == frozenset({0, 3})
    assert sym.is_partite()
    assert sym.is_undirected(z4)
    assert sym.is_bcay(z4)


def test_symbol_text_format(z4):
    sym = bcay_symbol(z4, {0, 1})
    text = symbol_to_text(z4, sym)
    assert text == "mcay m=2 n=4 group=Z4\nS 1 2 : 0,1\nS 2 1 : 0,3\n"
    g, parsed = symbol_from_text(text)
    assert g.name == "Z4"
    assert parsed == sym


def test_symbol_text_skips_comments():
    g, sym = symbol_from_text("# a comment\nmcay m=3 n=2 group=Z2\n\nS 1 2 : 0\nS 2 1 : 0\n")
    assert g.order == 2
    assert sym.m == 3
    assert not sym.get(2, 0)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "mcay m=2 group=Z4\n",
        "mcay m=2 n=5 group=Z4\n",
        "mcay m=2 n=4 group=Z4\nS 1 2 0,1\n",
        "mcay m=2 n=4 group=Z4\nS 1 3 : 0\n",
        "mcay m=2 n=4 group=Z4\nS 1 2 : 7\n",
    ],
)
def test_malformed_symbol_text(text):
    with pytest.raises(MalformedInputError):
        symbol_from_text(text)


def test_pad_symbol(z4):
    padded = pad_symbol(bcay_symbol(z4, {0}), 3)
    assert padded.m == 3
    assert padded.get(0, 1) == frozenset({0})
    assert not padded.get(2, 2)
    with pytest.raises(MalformedInputError):
        pad_symbol(padded, 2)


def test_symbol_must_be_square():
    with pytest.raises(MalformedInputError):
        ConnectionSymbol(2, ((frozenset(),),))


# ---------------------------------------------------------------------------
# Digraphs
# ---------------------------------------------------------------------------


def test_build_bcay_is_an_even_cycle(z4):
    d = build_bcay(z4, {0, 1})
    assert d.n_vertices == 8
    assert d.arc_count() == 16
    assert d.is_symmetric()
    assert d.adjacency.sum(axis=1).tolist() == [2] * 8
    assert d.vertex(1, 1) == 5
    assert d.colors().tolist() == [0] * 4 + [1] * 4


def test_arcs_follow_left_multiplication(z8):
    d = build_mcayley(z8, ConnectionSymbol.from_mapping(2, {(0, 1): {3}}))
    assert d.arcs() == [(x, 8 + (x + 3) % 8) for x in range(8)]
    assert not d.is_symmetric()


def test_build_rejects_foreign_elements(z4):
    with pytest.raises(MalformedInputError):
        build_mcayley(z4, ConnectionSymbol.from_mapping(2, {(0, 1): {9}}))


def test_connectivity(z4):
    assert is_connected_bcay(z4, {0, 1})
    assert not is_connected_bcay(z4, {0, 2})
    assert not is_connected_bcay(z4, set())


def _random_set(rng, g, lo=1):
    return frozenset(rng.sample(range(g.order), rng.randint(lo, g.order)))


_SMALL_GROUPS = ["Z2", "Z3", "Z4", "Z2^2", "Z5", "Z6", "S3", "Z8", "D8", "Q8"]


@pytest.mark.parametrize("position, spec", list(enumerate(_SMALL_GROUPS)))
def test_connectivity_on_random_sets(position, spec, config):
    g = named_group(spec)
    rng = random.Random(config.seed + position)
    for _ in range(100):
        s = _random_set(rng, g, lo=0)
        quotients = [g.mul(a, g.inv(b)) for a in s for b in s]
        expected = bool(s) and len(g.closure(quotients)) == g.order
        assert is_connected_bcay(g, s) is expected


def _closure_component(g, s):
    """``BCay(<S S^-1>, S)`` for ``S`` shifted to contain 1, cut out of
    ``BCay(G, S)``."""
    s = normalize_connection_set(g, s)
    h = sorted(g.closure([g.mul(a, g.inv(b)) for a in s for b in s]))
    keep = [i * g.order + x for i in range(2) for x in h]
    adjacency = build_bcay(g, s).adjacency
    return ColoredDigraph.from_adjacency(adjacency[np.ix_(keep, keep)])


@pytest.mark.parametrize("position, spec", list(enumerate(["Z4", "Z6", "S3", "Z8", "Z2^3", "D8", "Q8", "Z4xZ2"])))
def test_isomorphism_reduces_to_the_closure(position, spec, config):
    g = named_group(spec)
    rng = random.Random(config.seed + position)
    for _ in range(25):
        s = _random_set(rng, g)
        t = frozenset(rng.sample(range(g.order), len(s)))
        whole = is_isomorphic(
            ColoredDigraph.from_adjacency(build_bcay(g, s).adjacency),
            ColoredDigraph.from_adjacency(build_bcay(g, t).adjacency),
        )
        assert whole is is_isomorphic(_closure_component(g, s), _closure_component(g, t))


def test_networkx_export(z4):
    graph = build_bcay(z4, {0, 1}).to_networkx()
    assert graph.number_of_nodes() == 8
    assert graph.number_of_edges() == 16
    assert graph.nodes[5]["part"] == 1


def test_json_export_is_bit_exact(z4):
    data = build_bcay(z4, {0}).to_json()
    assert data["adjacency"][0] == "00001000"
    assert data["symbol"]["sets"][0] == {"i": 1, "j": 2, "elements": ["0"]}


def test_right_regular_is_semiregular(z4):
    r = right_regular(z4, 2)
    assert r.order() == 4
    assert r.is_semiregular() == (True, 2)
    d = build_bcay(z4, {0, 1})
    assert all(d.preserved_by(right_translation(z4, h, 2)) for h in range(4))


def test_bipartite_complement(z4):
    comp = bipartite_complement(build_bcay(z4, {0}))
    assert comp.symbol.get(0, 1) == frozenset({1, 2, 3})
    with pytest.raises(NotPartiteError):
        bipartite_complement(build_mcayley(z4, ConnectionSymbol.from_mapping(2, {(0, 0): {1}})))


def test_lexicographic_blowup(z4):
    adj, colors = lexicographic_blowup(build_bcay(z4, {0}), 3)
    assert adj.shape == (24, 24)
    assert int(adj.sum()) == 8 * 9
    assert colors.tolist() == [0] * 12 + [1] * 12


def test_normalize_connection_set(z4):
    assert normalize_connection_set(z4, {1, 2}) == frozenset({0, 1})
    with pytest.raises(MalformedInputError):
        normalize_connection_set(z4, set())


def test_quotient_bcay_is_a_lexicographic_product(z4):
    h = Subgroup.generated_by(z4, [2])
    lifted, small = quotient_bcay(z4, h, {0})
    assert lifted.symbol.get(0, 1) == frozenset({0, 2})
    assert small.n_vertices == 4
    adj, colors = lexicographic_blowup(small, 2)
    assert is_isomorphic(ColoredDigraph.from_mcayley(lifted), ColoredDigraph(adj, colors), "fixed")


def test_quotient_bcay_needs_normal_subgroup():
    s3 = named_group("S3")
    h = Subgroup.generated_by(s3, [s3.parse_element("(12)")])
    with pytest.raises(NotNormalError):
        quotient_bcay(s3, h, {0})


# ---------------------------------------------------------------------------
# Normalizer
# ---------------------------------------------------------------------------


def test_normalizer_and_kernel_orders(z3, config):
    big_n, big_k, k_stab = normalizer_and_kernel(z3, 2, config)
    assert big_n.order() == 36
    assert big_k.order() == 18
    assert k_stab.order() == 6
    assert big_k.is_subgroup_of(big_n)


def test_normalizer_orders_three_parts(config):
    g = named_group("Z2")
    big_n, big_k, _ = normalizer_and_kernel(g, 3, config)
    assert big_n.order() == 6 * 1 * 8
    assert big_k.order() == 8


@pytest.mark.parametrize(
    "spec, m", [("Z2", 2), ("Z3", 2), ("Z4", 2), ("Z2^2", 2), ("Z2", 3), ("Z2", 4)]
)
def test_normalizer_matches_brute_force(spec, m, config):
    g = named_group(spec)
    degree = m * g.order
    r = right_regular(g, m)
    brute = {
        p
        for p in map(Permutation, itertools.permutations(range(degree)))
        if all(r.contains(gen ** p) for gen in r.generators)
    }
    big_n, _, _ = normalizer_and_kernel(g, m, config)
    assert brute == set(big_n.elements())


def test_part_swap_moves_the_set(z4):
    sym = bcay_symbol(z4, {0, 1})
    swapped = apply_normalizer(sym, part_permutation(z4, Permutation([1, 0])))
    assert swapped.get(0, 1) == frozenset({0, 3})
    assert swapped.get(1, 0) == frozenset({0, 1})


def test_inversion_swap_fixes_abelian_bcay(z4):
    sym = bcay_symbol(z4, {0, 1})
    iota = inversion_swap(z4)
    assert apply_normalizer(sym, iota) == sym
    assert build_bcay(z4, {0, 1}).preserved_by(iota.to_permutation())
    with pytest.raises(MalformedInputError):
        inversion_swap(named_group("S3"))


def test_left_translation_shifts_one_part(z4):
    sym = bcay_symbol(z4, {0, 1})
    image = apply_normalizer(sym, left_translation(z4, 1, 0, 2))
    assert image.get(0, 1) == frozenset({1, 2})
    perm = left_translation(z4, 1, 0, 2).to_permutation()
    assert perm.images[:4] == (3, 0, 1, 2)
    assert perm.images[4:] == (4, 5, 6, 7)


def test_symbol_image_matches_vertex_image(z8):
    sym = ConnectionSymbol.from_mapping(2, {(0, 1): {0, 1, 2, 5}, (1, 1): {3, 5}})
    elem = NormalizerElement(z8, (3, 6), 1, _times(z8, 3), Permutation([1, 0]))
    d = build_mcayley(z8, sym)
    image = build_mcayley(z8, apply_normalizer(sym, elem))
    assert np.array_equal(d.image_adjacency(elem.to_permutation()), image.adjacency)


def test_reduced_element_acts_the_same(z8):
    elem = NormalizerElement(z8, (3, 6), 1, _times(z8, 5), Permutation([1, 0]))
    reduced = elem.reduced()
    assert reduced.translations[0] == z8.identity
    assert reduced.to_permutation() == elem.to_permutation()


# ---------------------------------------------------------------------------
# Seeded normalizer samples
# ---------------------------------------------------------------------------


def test_normalizer_samples_follow_the_seed(z8):
    first = random_normalizer_elements(z8, 2, 10, RunConfig(seed=7))
    again = random_normalizer_elements(z8, 2, 10, RunConfig(seed=7))
    other = random_normalizer_elements(z8, 2, 10, RunConfig(seed=8))
    assert [n.to_json() for n in first] == [n.to_json() for n in again]
    assert [n.to_json() for n in first] != [n.to_json() for n in other]


_SYMBOL_CORPUS = [
    ("Z8", {(0, 1): {0, 1, 2, 5}, (1, 1): {3, 5}}),
    ("Z4xZ2", {(0, 1): {1, 2}, (1, 2): {0, 3}, (2, 0): {5}, (2, 2): {1, 7}}),
    ("S3", {(0, 1): {0, 1, 3}, (1, 0): {2}}),
    ("Q8", {(0, 0): {1, 2}, (0, 1): {0, 1, 2}}),
    ("D8", {(0, 0): {1}, (0, 1): {0, 3}, (1, 0): {2}, (1, 1): {4, 5}}),
]


@pytest.mark.parametrize("spec, mapping", _SYMBOL_CORPUS)
def test_symbol_images_agree_on_samples(spec, mapping, config):
    g = named_group(spec)
    m = 1 + max(max(key) for key in mapping)
    d = build_mcayley(g, ConnectionSymbol.from_mapping(m, mapping))
    assert check_symbol_images(d, 100, config) == []


def _times(g, k):
    from cayleyiso.groups import GroupMap

    return GroupMap(g, g, tuple(g.power(x, k) for x in range(g.order)))


# EOF

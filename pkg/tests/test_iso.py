#!/usr/bin/env python3
"""Tests for cayleyiso.iso: canonical forms, automorphism groups, isomorphisms."""

import networkx as nx
import numpy as np
import pytest

from cayleyiso import BudgetExceededError, MalformedInputError, RunConfig
from cayleyiso.iso import (
    ColoredDigraph,
    automorphisms,
    canonical,
    find_isomorphism,
    is_isomorphic,
)
from cayleyiso.groups import named_group
from cayleyiso.mcayley import build_bcay
from cayleyiso.perm import Permutation


def _cycle(n, directed=True):
    adj = np.zeros((n, n), dtype=bool)
    for i in range(n):
        adj[i, (i + 1) % n] = True
        if not directed:
            adj[(i + 1) % n, i] = True
    return ColoredDigraph.from_adjacency(adj)


def _petersen():
    return ColoredDigraph.from_adjacency(nx.to_numpy_array(nx.petersen_graph(), dtype=bool))


# ---------------------------------------------------------------------------
# Automorphism groups
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "digraph, order",
    [
        (_cycle(4), 4),
        (_cycle(4, directed=False), 8),
        (_cycle(7, directed=False), 14),
        (ColoredDigraph.from_adjacency(~np.eye(4, dtype=bool)), 24),
        (_petersen(), 120),
    ],
)
def test_automorphism_orders(digraph, order):
    assert automorphisms(digraph).order() == order


def test_colour_modes():
    d = ColoredDigraph(np.zeros((2, 2), dtype=bool), np.array([0, 1]))
    assert automorphisms(d, "fixed").order() == 1
    assert automorphisms(d, "permutable").order() == 2


def test_fixed_colours_cut_the_group():
    adj = ~np.eye(4, dtype=bool)
    d = ColoredDigraph(adj, np.array([0, 0, 1, 1]))
    assert automorphisms(d, "fixed").order() == 4
    assert automorphisms(d, "permutable").order() == 8


def test_unknown_mode():
    with pytest.raises(MalformedInputError):
        canonical(_cycle(3), "loose")


def test_vertex_bound():
    d = ColoredDigraph.from_adjacency(np.zeros((257, 257), dtype=bool))
    with pytest.raises(BudgetExceededError):
        canonical(d)


def test_search_budget():
    d = ColoredDigraph.from_adjacency(~np.eye(4, dtype=bool))
    with pytest.raises(BudgetExceededError):
        automorphisms(d, config=RunConfig(search_budget=1))


# ---------------------------------------------------------------------------
# Canonical forms and isomorphisms
# ---------------------------------------------------------------------------


def test_canonical_form_is_relabel_invariant():
    d = _petersen()
    perm = Permutation([3, 7, 1, 0, 9, 2, 8, 5, 4, 6])
    assert canonical(d).canonical_bytes == canonical(d.relabel(perm)).canonical_bytes
    assert canonical(d).hex() == canonical(d).canonical_bytes.hex()


def _random_digraph(seed, n=10, p=0.3):
    adj = np.random.default_rng(seed).random((n, n)) < p
    np.fill_diagonal(adj, False)
    return ColoredDigraph.from_adjacency(adj)


def _bcay_parts(spec, s):
    return ColoredDigraph.from_mcayley(build_bcay(named_group(spec), s))


_CORPUS = {
    "directed_hexagon": lambda: _cycle(6),
    "heptagon": lambda: _cycle(7, directed=False),
    "petersen": _petersen,
    "random_digraph": lambda: _random_digraph(11),
    "bcay_z8": lambda: _bcay_parts("Z8", {0, 1, 2, 5}),
    "bcay_s3": lambda: _bcay_parts("S3", {0, 1, 3}),
}


def _shuffles(n, count):
    rng = np.random.default_rng(RunConfig().seed)
    return [Permutation(rng.permutation(n).tolist()) for _ in range(count)]


@pytest.mark.parametrize("name", sorted(_CORPUS))
@pytest.mark.parametrize("mode", ["fixed", "permutable"])
def test_canonical_form_survives_fifty_relabelings(name, mode):
    d = _CORPUS[name]()
    expected = canonical(d, mode).canonical_bytes
    for perm in _shuffles(d.n, 50):
        assert canonical(d.relabel(perm), mode).canonical_bytes == expected


def _nauty_graph(pynauty, d):
    adjacency = {v: np.flatnonzero(d.adjacency[v]).tolist() for v in range(d.n)}
    return pynauty.Graph(d.n, directed=True, adjacency_dict=adjacency)


@pytest.mark.parametrize("name", sorted(_CORPUS))
def test_canonical_agrees_with_nauty_certificates(name):
    pynauty = pytest.importorskip("pynauty")
    d = ColoredDigraph.from_adjacency(_CORPUS[name]().adjacency)
    ours = canonical(d).canonical_bytes
    theirs = pynauty.certificate(_nauty_graph(pynauty, d))
    rng = np.random.default_rng(RunConfig().seed)
    for k, perm in enumerate(_shuffles(d.n, 20)):
        other = d.relabel(perm)
        if k % 2:
            adj = other.adjacency.copy()
            a, b = rng.choice(d.n, 2, replace=False)
            adj[a, b] = not adj[a, b]
            other = ColoredDigraph.from_adjacency(adj)
        same_ours = canonical(other).canonical_bytes == ours
        same_theirs = pynauty.certificate(_nauty_graph(pynauty, other)) == theirs
        assert same_ours == same_theirs
        assert same_ours == is_isomorphic(d, other)


def test_canonical_header():
    form = canonical(_cycle(5))
    assert form.canonical_bytes[0] == 1
    assert int.from_bytes(form.canonical_bytes[1:3], "big") == 5
    assert sorted(form.labeling.images) == list(range(5))


def test_directed_cycle_differs_from_its_undirected_version():
    assert not is_isomorphic(_cycle(4), _cycle(4, directed=False))


def test_find_isomorphism_maps_arcs():
    d1 = _petersen()
    perm = Permutation([9, 8, 7, 6, 5, 4, 3, 2, 1, 0])
    d2 = d1.relabel(perm)
    iso = find_isomorphism(d1, d2)
    assert iso is not None
    images = np.asarray(iso.images)
    assert np.array_equal(d2.adjacency[np.ix_(images, images)], d1.adjacency)


def test_find_isomorphism_none():
    hexagon = _cycle(6, directed=False)
    triangles = np.zeros((6, 6), dtype=bool)
    for a, b in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]:
        triangles[a, b] = triangles[b, a] = True
    assert find_isomorphism(hexagon, ColoredDigraph.from_adjacency(triangles)) is None
    assert find_isomorphism(hexagon, _cycle(5, directed=False)) is None


@pytest.mark.parametrize("seed", range(5))
def test_agrees_with_networkx(seed):
    rng = np.random.default_rng(seed)
    a = rng.random((9, 9)) < 0.3
    b = rng.random((9, 9)) < 0.3
    np.fill_diagonal(a, False)
    np.fill_diagonal(b, False)
    expected = nx.is_isomorphic(nx.DiGraph(a), nx.DiGraph(b))
    assert is_isomorphic(ColoredDigraph.from_adjacency(a), ColoredDigraph.from_adjacency(b)) is expected
    shuffled = Permutation(rng.permutation(9).tolist())
    assert is_isomorphic(ColoredDigraph.from_adjacency(a), ColoredDigraph.from_adjacency(a).relabel(shuffled))


def test_permutable_isomorphism_swaps_colours():
    adj = np.zeros((3, 3), dtype=bool)
    adj[0, 1] = True
    d1 = ColoredDigraph(adj, np.array([0, 1, 1]))
    d2 = ColoredDigraph(adj, np.array([1, 0, 0]))
    assert not is_isomorphic(d1, d2, "fixed")
    assert is_isomorphic(d1, d2, "permutable")


def test_malformed_digraph():
    with pytest.raises(MalformedInputError):
        ColoredDigraph(np.zeros((2, 3), dtype=bool), np.zeros(2))
    with pytest.raises(MalformedInputError):
        ColoredDigraph(np.zeros((2, 2), dtype=bool), np.zeros(3))


# EOF

#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/ci/_criteria.py
"""Graph-level decisions: KmCI, KmPCI, 2PCI, K2PCI and vertex-transitivity.

Two routes decide 2PCI and K2PCI for ``BCay(G, S)``:

``exhaustive``
    Every kernel orbit of connection sets of size ``|S|`` is visited; a
    representative ``T`` whose graph has the canonical form of
    ``BCay(G, S)`` but lies outside the allowed transform family refutes
    the property.
``criterion``
    The property holds iff every semiregular copy of ``G`` in
    ``Aut(Gamma)`` with orbit set ``{G_1, G_2}`` is conjugate to ``R(G)``,
    and, for K2PCI, ``N_Aut(Gamma)(R(G))`` is transitive on vertices.
"""

from __future__ import annotations

import logging
import math

from .._config import RunConfig, resolve
from .._errors import MalformedInputError, NotPartiteError
from ..groups import FiniteGroup, automorphism_group
from ..iso import ColoredDigraph, automorphisms
from ..mcayley import MCayleyDigraph, build_bcay
from ._bci import bcay_canonical, bci_condition3, family_witness, witness_to_json
from ._normalizer_in_aut import induced_on_parts, normalizer_in_aut
from ._semiregular import semiregular_search, validate_witness
from ._verdict import CiVerdict

logger = logging.getLogger(__name__)

EXHAUSTIVE_SUBSET_BOUND = 1_000_000
ROUTES = ("auto", "exhaustive", "criterion")


# ----------------------------------------------------------------------
# Babai-type criteria on arbitrary m-Cayley digraphs
# ----------------------------------------------------------------------


def _normalizer_report(d: MCayleyDigraph, cfg: RunConfig) -> tuple[bool, dict]:
    na = normalizer_in_aut(d, cfg)
    induced = induced_on_parts(na, d.group.order, d.m)
    report = {
        "normalizer_order": na.order(),
        "induced_order": induced.order(),
        "required_order": math.factorial(d.m),
        "part_orbits": [[p + 1 for p in block] for block in induced.orbits()],
    }
    return induced.order() == math.factorial(d.m), report


def _semiregular_verdict(d, prop, same_orbit_set, cfg, used, label, route="criterion"):
    search = semiregular_search(d, same_orbit_set, cfg)
    used["semiregular_nodes"] = search.nodes
    used["semiregular_classes"] = search.class_count
    used["aut_order"] = search.ambient_order
    if search.class_count > 1:
        witness = search.classes[1]
        validate_witness(d, search, witness, cfg)
        return CiVerdict(
            prop,
            d.group.name,
            label,
            False,
            {"kind": "non_conjugate_semiregular", "witness": witness.to_json()},
            used,
            route,
        )
    return None


def _babai_test(d: MCayleyDigraph, prop: str, same_orbit_set: bool, cfg: RunConfig) -> CiVerdict:
    label = d.symbol.to_json(d.group)
    full, report = _normalizer_report(d, cfg)
    used = {"normalizer_order": report["normalizer_order"]}
    if not full:
        return CiVerdict(
            prop,
            d.group.name,
            label,
            False,
            {"kind": "normalizer_not_symmetric_on_parts", **report},
            used,
        )
    failed = _semiregular_verdict(d, prop, same_orbit_set, cfg, used, label)
    if failed is not None:
        return failed
    return CiVerdict(prop, d.group.name, label, True, None, used)


def kmci_test(d: MCayleyDigraph, config: RunConfig | None = None) -> CiVerdict:
    """KmCI: ``N_A(R(G))`` induces ``S_m`` on the parts and every
    semiregular copy of ``G`` in ``Aut(Gamma)`` is conjugate to ``R(G)``."""
    return _babai_test(d, "kmci", False, resolve(config))


def kmpci_test(d: MCayleyDigraph, config: RunConfig | None = None) -> CiVerdict:
    """KmPCI: as :func:`kmci_test`, restricted to copies whose orbit set
    is the part set.

    Raises
    ------
    NotPartiteError
        If some diagonal set is nonempty.
    """
    if not d.symbol.is_partite():
        raise NotPartiteError("kmpci_test needs an m-PCayley digraph")
    return _babai_test(d, "kmpci", True, resolve(config))


def is_vertex_transitive(d: MCayleyDigraph, config: RunConfig | None = None) -> bool:
    """Orbit of vertex 0 under ``Aut(Gamma)`` is the whole vertex set."""
    group = automorphisms(ColoredDigraph.from_adjacency(d.adjacency), "fixed", config)
    return len(group.orbit(0)) == d.n_vertices


# ----------------------------------------------------------------------
# Bi-Cayley graphs
# ----------------------------------------------------------------------


def _prepare(g: FiniteGroup, s) -> tuple[frozenset, bool]:
    s = frozenset(s)
    bad = [x for x in s if not 0 <= x < g.order]
    if bad:
        raise MalformedInputError(f"elements {bad} are not in {g.name}")
    if 2 * len(s) <= g.order:
        return s, False
    return frozenset(range(g.order)) - s, True


def _pick_route(route: str, n: int, k: int, cfg: RunConfig) -> str:
    if route not in ROUTES:
        raise MalformedInputError(f"unknown route {route!r}; expected one of {ROUTES}")
    if route != "auto":
        return route
    subsets = math.comb(n, k)
    return "exhaustive" if subsets <= min(EXHAUSTIVE_SUBSET_BOUND, cfg.census_budget) else "criterion"


def _exhaustive(g, s, prop, two_sided, action, cfg) -> CiVerdict:
    from ..census._orbits import k_orbits_on_subsets

    work, complemented = _prepare(g, s)
    index = k_orbits_on_subsets(g, [len(work)], config=cfg, action=action)
    target = bcay_canonical(g, work, cfg)
    auts = automorphism_group(g, cfg)
    matched = 0
    used = {"orbits": len(index.orbits), "subsets": index.accounted}
    for orbit in index.orbits:
        t = orbit.representative
        if bcay_canonical(g, t, cfg) != target:
            continue
        matched += 1
        if family_witness(g, work, t, two_sided, auts) is None:
            failing = frozenset(range(g.order)) - t if complemented else t
            used["isomorphic_orbits"] = matched
            logger.info("%s(%s): isomorphic set %s outside the family", prop, g.name, g.set_labels(failing))
            return CiVerdict(
                prop,
                g.name,
                g.set_labels(s),
                False,
                {
                    "kind": "isomorphic_set_outside_family",
                    "T": g.set_labels(failing),
                    "via_complement": complemented,
                },
                used,
                "exhaustive",
            )
    used["isomorphic_orbits"] = matched
    return CiVerdict(prop, g.name, g.set_labels(s), True, None, used, "exhaustive")


def _criterion(g, s, prop, cfg) -> CiVerdict:
    d = build_bcay(g, s)
    label = g.set_labels(s)
    used: dict = {}
    failed = _semiregular_verdict(d, prop, True, cfg, used, label)
    if failed is not None:
        return failed
    if prop == "k2pci":
        na = normalizer_in_aut(d, cfg)
        used["normalizer_order"] = na.order()
        if not na.is_transitive():
            return CiVerdict(
                prop,
                g.name,
                label,
                False,
                {"kind": "normalizer_not_transitive", "normalizer_order": na.order()},
                used,
            )
    return CiVerdict(prop, g.name, label, True, None, used)


def two_pci_graph_test(
    g: FiniteGroup, s, config: RunConfig | None = None, route: str = "auto"
) -> CiVerdict:
    """Is every ``BCay(G, T)`` isomorphic to ``BCay(G, S)`` of the form
    ``g^-1 S^alpha`` or ``(S^-1)^alpha g``?

    Parameters
    ----------
    route : {"auto", "exhaustive", "criterion"}
        ``auto`` enumerates when ``C(|G|, k)`` is at most
        ``EXHAUSTIVE_SUBSET_BOUND`` (and the census budget), with ``k``
        the size of ``S`` or of its complement.

    Raises
    ------
    BudgetExceededError
        From the census, the canonical search or the semiregular search.
    """
    cfg = resolve(config)
    work, _ = _prepare(g, s)
    chosen = _pick_route(route, g.order, len(work), cfg)
    if chosen == "exhaustive":
        return _exhaustive(g, s, "2pci", True, "k", cfg)
    return _criterion(g, frozenset(s), "2pci", cfg)


def k2pci_graph_test(
    g: FiniteGroup, s, config: RunConfig | None = None, route: str = "auto"
) -> CiVerdict:
    """Is every ``BCay(G, T)`` isomorphic to ``BCay(G, S)`` of the form
    ``g^-1 S^alpha``? Routes as in :func:`two_pci_graph_test`."""
    cfg = resolve(config)
    work, _ = _prepare(g, s)
    chosen = _pick_route(route, g.order, len(work), cfg)
    if chosen == "exhaustive":
        return _exhaustive(g, s, "k2pci", False, "k", cfg)
    return _criterion(g, frozenset(s), "k2pci", cfg)


def stabilizer_form_k2pci(g: FiniteGroup, s, config: RunConfig | None = None) -> CiVerdict:
    """K2PCI decided over orbits of the vertex stabilizer in ``K``
    (left translations and automorphisms only)."""
    verdict = _exhaustive(g, s, "k2pci", False, "stabilizer", resolve(config))
    verdict.route = "stabilizer"
    return verdict


def bci3_verdict(g: FiniteGroup, s, config: RunConfig | None = None) -> CiVerdict:
    """:func:`bci_condition3` as a verdict with the pair as certificate."""
    s = frozenset(s)
    pair = bci_condition3(g, s, config)
    if pair is None:
        return CiVerdict(
            "bci3",
            g.name,
            g.set_labels(s),
            False,
            {"kind": "no_pair", "automorphisms": len(automorphism_group(g, resolve(config)))},
            route="search",
        )
    alpha, c = pair
    certificate = witness_to_json(g, {"form": "right", "alpha": alpha, "g": c})
    return CiVerdict("bci3", g.name, g.set_labels(s), True, certificate, route="search")


def three_way_bci_check(g: FiniteGroup, s, config: RunConfig | None = None) -> dict:
    """On a 2PCI graph: K2PCI, vertex-transitivity of ``N_A(R(G))`` and
    the existence of ``S^alpha = S^-1 c`` must coincide."""
    cfg = resolve(config)
    two = two_pci_graph_test(g, s, cfg)
    report = {"group": g.name, "set": g.set_labels(s), "two_pci": two.result}
    if not two.result:
        report["applicable"] = False
        return report
    k2 = k2pci_graph_test(g, s, cfg).result
    transitive = normalizer_in_aut(build_bcay(g, s), cfg).is_transitive()
    pair = bci_condition3(g, s, cfg) is not None
    report.update(
        applicable=True,
        k2pci=k2,
        normalizer_transitive=transitive,
        condition3=pair,
        agree=k2 == transitive == pair,
    )
    return report


__all__ = [
    "ROUTES",
    "EXHAUSTIVE_SUBSET_BOUND",
    "kmci_test",
    "kmpci_test",
    "is_vertex_transitive",
    "two_pci_graph_test",
    "k2pci_graph_test",
    "stabilizer_form_k2pci",
    "bci3_verdict",
    "three_way_bci_check",
]

# EOF

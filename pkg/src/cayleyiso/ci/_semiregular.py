#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/ci/_semiregular.py
"""Semiregular subgroups of Aut(Gamma) isomorphic to G, up to conjugacy.

``W`` is the part-preserving automorphism group when the orbit set must
equal the parts, and the full automorphism group otherwise. Two searches
visit every ``W``-class of semiregular copies of ``G`` at least once:

listing
    A homomorphism ``G -> W`` is fixed by the images of a generating
    sequence of ``G``, chosen among the listed elements of ``W`` with
    uniform cycles of the right order, up to conjugation by the
    centralizer of the images already fixed. Needs ``|W| <= element_cap``.
labeling
    A semiregular copy ``H`` is read off a labeling ``beta(x, j) =
    v_j ** phi(x)`` of the vertices by ``G x parts``; ``H`` preserves the
    arcs iff the pulled-back digraph is invariant under right
    multiplication, i.e. iff each arc type ``(j, k, y x^-1)`` takes one
    value. Labels are fixed one at a time, the first few by choosing
    which group element moves the base vertex to a target (up to
    ``Aut(G)``), the rest up to the stabilizer in ``W`` of the vertices
    already labelled.

The survivors are bucketed into ``Aut(Gamma)``-classes with
:func:`conjugating_element`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .._config import RunConfig, resolve
from .._errors import BudgetExceededError, InvariantViolation, MalformedInputError
from ..groups import FiniteGroup, automorphism_permgroup
from ..iso import ColoredDigraph, automorphisms
from ..mcayley import MCayleyDigraph, right_regular, right_translation
from ..perm import Permutation, PermGroup, conjugating_element

logger = logging.getLogger(__name__)

STRATEGIES = ("auto", "listing", "labeling")


@dataclass
class SemiregularClass:
    """One ``Aut(Gamma)``-conjugacy class of semiregular copies of ``G``.

    ``images[k]`` is the image of the ``k``-th element of the group's
    generating sequence.
    """

    group: PermGroup
    images: list[Permutation] = field(repr=False)
    is_right_regular: bool = False
    hits: int = 1

    def to_json(self) -> dict:
        return {
            "order": self.group.order(),
            "generators": [p.cycle_string() for p in self.images],
            "right_regular": self.is_right_regular,
            "hits": self.hits,
        }


@dataclass
class SemiregularReport:
    classes: list[SemiregularClass]
    nodes: int
    ambient_order: int
    search_order: int
    same_orbit_set: bool
    ambient: PermGroup = field(repr=False)
    strategy: str = "listing"

    @property
    def class_count(self) -> int:
        return len(self.classes)


# ----------------------------------------------------------------------
# Helpers
# ----------------------------------------------------------------------


def span_images(g: FiniteGroup, gens: list[int], images: list[Permutation], degree: int):
    """Extend generator images to a homomorphism on ``<gens>``.

    Returns ``{element: permutation}``, or None when the images are
    inconsistent with the multiplication table or some non-identity
    element would not act with uniform cycles of its own order.
    """
    orders = g.element_orders()
    phi = {g.identity: Permutation.identity(degree)}
    queue = [g.identity]
    for y in queue:
        for gen, img in zip(gens, images):
            z = g.mul(y, gen)
            cand = phi[y] * img
            known = phi.get(z)
            if known is not None:
                if known != cand:
                    return None
                continue
            if not cand.is_uniform(orders[z]):
                return None
            phi[z] = cand
            queue.append(z)
    return phi


def _pools(elements: list[Permutation], wanted: set[int]) -> dict[int, list[Permutation]]:
    pools: dict[int, list[Permutation]] = {k: [] for k in wanted}
    for w in elements:
        ctype = w.cycle_type()
        k = ctype[0]
        if k in pools and ctype[-1] == k:
            pools[k].append(w)
    for k in pools:
        pools[k].sort()
    return pools


def _conjugacy_reps(pool: list[Permutation], acting: list[Permutation], closed: bool):
    """Representatives of ``pool`` under conjugation.

    ``closed`` means ``acting`` is a whole group (orbit = one pass);
    otherwise ``acting`` generates it and the orbit is closed by search.
    """
    seen: set[Permutation] = set()
    reps = []
    for x in pool:
        if x in seen:
            continue
        reps.append(x)
        if closed:
            seen.update(x ** c for c in acting)
            continue
        orbit = {x}
        queue = [x]
        for y in queue:
            for c in acting:
                z = y ** c
                if z not in orbit:
                    orbit.add(z)
                    queue.append(z)
        seen |= orbit
    return reps


def _search(g, degree, w_group, w_elements, pools, budget):
    gens = g.generating_sequence()
    orders = g.element_orders()
    found: dict[frozenset, list[Permutation]] = {}
    nodes = 0

    if not gens:
        ident = Permutation.identity(degree)
        return {frozenset([ident]): []}, 0

    def extend(level: int, images: list, centralizer: list):
        nonlocal nodes
        pool = pools[orders[gens[level]]]
        if level == 0:
            reps = _conjugacy_reps(pool, w_group.generators, closed=False)
        else:
            reps = _conjugacy_reps(pool, centralizer, closed=True)
        for x in reps:
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(
                    f"semiregular subgroup search ({len(found)} partial, unusable)",
                    budget,
                    nodes,
                )
            trial = images + [x]
            phi = span_images(g, gens[: level + 1], trial, degree)
            if phi is None:
                continue
            if level + 1 == len(gens):
                found.setdefault(frozenset(phi.values()), trial)
                continue
            source = w_elements if level == 0 else centralizer
            extend(level + 1, trial, [c for c in source if x * c == c * x])

    extend(0, [], w_elements)
    return found, nodes


# ----------------------------------------------------------------------
# Labeling search
# ----------------------------------------------------------------------


def _orbit_ids(group: PermGroup | None, degree: int) -> np.ndarray | None:
    """Orbit index of every point, or None for a trivial group."""
    if group is None or group.is_trivial():
        return None
    ids = np.empty(degree, dtype=np.int64)
    for k, block in enumerate(group.orbits()):
        ids[block] = k
    return ids


def _orbit_reps(points: np.ndarray, ids: np.ndarray | None) -> np.ndarray:
    if ids is None or len(points) < 2:
        return points
    _, first = np.unique(ids[points], return_index=True)
    return points[np.sort(first)]


class _LabelingSearch:
    """Backtrack over labelings ``beta: G x parts -> V``.

    ``known`` holds the value of every arc type met so far at flat index
    ``(j * m + k) * n + s``: arcs from ``(x, j)`` to ``(y, k)`` with
    ``y x^-1 = s``. -1 marks an unseen type.
    """

    def __init__(
        self,
        d: MCayleyDigraph,
        w_group: PermGroup,
        aut: PermGroup | None,
        same_orbit_set: bool,
        budget: int,
    ):
        g = d.group
        self.d = d
        self.g = g
        self.n, self.m = g.order, d.m
        self.degree = d.n_vertices
        self.adj = np.asarray(d.adjacency, dtype=bool)
        self.table = np.asarray(g.table, dtype=np.int64)
        self.ginv = np.asarray(g.inverse, dtype=np.int64)
        self.w_group = w_group
        self.aut = aut
        self.same = same_orbit_set
        self.budget = budget
        self.nodes = 0
        self.gens = g.generating_sequence()
        self.known = np.full(self.m * self.m * self.n, -1, dtype=np.int8)
        self.used = np.zeros(self.degree, dtype=bool)
        self.beta = np.full((self.m, self.n), -1, dtype=np.int64)
        self.dom_x: list[int] = []
        self.dom_j: list[int] = []
        self.dom_v: list[int] = []
        self.order = [(x, j) for x in self._bfs() for j in range(self.m)]
        self.found: dict[frozenset, list[Permutation]] = {}

    def _bfs(self) -> list[int]:
        seen = {self.g.identity}
        out = [self.g.identity]
        for x in out:
            for gen in self.gens:
                y = self.g.mul(x, gen)
                if y not in seen:
                    seen.add(y)
                    out.append(y)
        return out

    # ------------------------------------------------------------------

    def _admissible(self, x: int, j: int, cands: np.ndarray):
        """Mask of candidate images of ``(x, j)`` and the arc types they fix.

        Returns ``(ok, fresh_index, fresh_values)``; ``fresh_values`` has
        one row per candidate.
        """
        n, m = self.n, self.m
        xs = np.asarray(self.dom_x, dtype=np.int64)
        ks = np.asarray(self.dom_j, dtype=np.int64)
        us = np.asarray(self.dom_v, dtype=np.int64)
        idx = np.concatenate(
            [
                (j * m + ks) * n + self.table[xs, self.ginv[x]],
                (ks * m + j) * n + self.table[x, self.ginv[xs]],
                np.array([(j * m + j) * n + self.g.identity]),
            ]
        )
        vals = np.concatenate(
            [
                self.adj[np.ix_(cands, us)],
                self.adj[np.ix_(us, cands)].T,
                self.adj[cands, cands][:, None],
            ],
            axis=1,
        )
        state = self.known[idx]
        seen = state >= 0
        ok = np.all(vals[:, seen] == (state[seen] == 1), axis=1)
        fresh = np.flatnonzero(~seen)
        f_idx = idx[fresh]
        f_vals = vals[:, fresh]
        if len(f_idx) > 1:
            order = np.argsort(f_idx, kind="stable")
            dup = f_idx[order][1:] == f_idx[order][:-1]
            if dup.any():
                s_vals = f_vals[:, order]
                ok &= ~np.any((s_vals[:, 1:] != s_vals[:, :-1])[:, dup], axis=1)
        return ok, f_idx, f_vals

    def _assign(self, x: int, j: int, v: int, f_idx: np.ndarray, f_row: np.ndarray) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(
                f"semiregular labeling search ({len(self.found)} partial, unusable)",
                self.budget,
                self.nodes,
            )
        self.known[f_idx] = f_row
        self.beta[j, x] = v
        self.used[v] = True
        self.dom_x.append(x)
        self.dom_j.append(j)
        self.dom_v.append(v)

    def _unassign(self, x: int, j: int, v: int, f_idx: np.ndarray) -> None:
        self.known[f_idx] = -1
        self.beta[j, x] = -1
        self.used[v] = False
        self.dom_x.pop()
        self.dom_j.pop()
        self.dom_v.pop()

    def _candidates(self, x: int, j: int) -> np.ndarray:
        if x == self.g.identity and (self.same or j == 0):
            return np.array([j * self.n], dtype=np.int64)
        free = ~self.used
        if self.same:
            free[: j * self.n] = False
            free[(j + 1) * self.n :] = False
        return np.flatnonzero(free)

    # ------------------------------------------------------------------

    def _label(self, pos: int, stab: PermGroup | None, ids: np.ndarray | None) -> None:
        """Label ``order[pos:]`` up to the stabilizer ``stab`` of the labels so far."""
        while pos < len(self.order) and self.beta[self.order[pos][1], self.order[pos][0]] >= 0:
            pos += 1
        if pos == len(self.order):
            self._leaf()
            return
        x, j = self.order[pos]
        cands = self._candidates(x, j)
        ok, f_idx, f_vals = self._admissible(x, j, cands)
        rows = np.flatnonzero(ok)
        if ids is not None and len(rows) > 1:
            _, first = np.unique(ids[cands[rows]], return_index=True)
            rows = rows[np.sort(first)]
        for r in rows.tolist():
            v = int(cands[r])
            self._assign(x, j, v, f_idx, f_vals[r])
            if ids is None or np.count_nonzero(ids == ids[v]) == 1:
                sub, sub_ids = stab, ids
            else:
                sub = stab.stabilizer(v)
                sub_ids = _orbit_ids(sub, self.degree)
            if pos == self.m - 1:
                self._anchor(self.aut, _orbit_ids(self.aut, self.n), [], sub)
            else:
                self._label(pos + 1, sub, sub_ids)
            self._unassign(x, j, v, f_idx)

    def _anchor(self, astab: PermGroup | None, aids, targets: list[int], stab: PermGroup | None) -> None:
        """Choose which element moves the base vertex to the least free vertex.

        Candidates are taken up to the automorphisms of ``G`` fixing the
        elements chosen so far.
        """
        free = np.flatnonzero(~self.used)
        if aids is None or len(free) == 0:
            if targets and stab is not None and not stab.is_trivial():
                stab = stab.pointwise_stabilizer(targets)
            self._label(self.m, stab, _orbit_ids(stab, self.degree))
            return
        t = int(free[0])
        target = np.array([t], dtype=np.int64)
        parts = [t // self.n] if self.same else range(self.m)
        for j in parts:
            for x in _orbit_reps(np.flatnonzero(self.beta[j] < 0), aids).tolist():
                ok, f_idx, f_vals = self._admissible(x, j, target)
                if not ok[0]:
                    continue
                self._assign(x, j, t, f_idx, f_vals[0])
                if np.count_nonzero(aids == aids[x]) == 1:
                    sub, sub_ids = astab, aids
                else:
                    sub = astab.stabilizer(x)
                    sub_ids = _orbit_ids(sub, self.n)
                self._anchor(sub, sub_ids, targets + [t], stab)
                self._unassign(x, j, t, f_idx)

    def _leaf(self) -> None:
        images = []
        for gen in self.gens:
            img = np.empty(self.degree, dtype=np.int64)
            column = self.table[:, gen]
            for j in range(self.m):
                img[self.beta[j]] = self.beta[j][column]
            images.append(Permutation(img.tolist()))
        if not all(self.d.preserved_by(p) for p in images):
            raise InvariantViolation("labeling produced a non-automorphism")
        phi = span_images(self.g, self.gens, images, self.degree)
        if phi is None:
            raise InvariantViolation("labeling produced a non-semiregular group")
        self.found.setdefault(frozenset(phi.values()), images)

    def run(self) -> tuple[dict[frozenset, list[Permutation]], int]:
        self._label(0, self.w_group, _orbit_ids(self.w_group, self.degree))
        return self.found, self.nodes


def _labeling_search(d, w_group, same_orbit_set, cfg):
    try:
        aut = automorphism_permgroup(d.group, cfg)
    except BudgetExceededError as exc:
        logger.debug("labeling search without Aut(G) anchoring: %s", exc)
        aut = None
    return _LabelingSearch(d, w_group, aut, same_orbit_set, cfg.search_budget).run()


# ----------------------------------------------------------------------
# Public API
# ----------------------------------------------------------------------


def semiregular_search(
    d: MCayleyDigraph,
    same_orbit_set: bool = True,
    config: RunConfig | None = None,
    strategy: str = "auto",
) -> SemiregularReport:
    """Classes of semiregular subgroups ``H <= Aut(Gamma)`` with ``H ~ G``.

    Parameters
    ----------
    d : MCayleyDigraph
    same_orbit_set : bool
        Require the orbit set of ``H`` to be the part set.
    config : RunConfig, optional
    strategy : {"auto", "listing", "labeling"}
        ``auto`` lists ``W`` when ``|W| <= element_cap`` and labels
        otherwise.

    Raises
    ------
    MalformedInputError
        On an unknown strategy.
    BudgetExceededError
        If listing is forced beyond ``element_cap`` or a search exceeds
        ``search_budget`` nodes.
    """
    if strategy not in STRATEGIES:
        raise MalformedInputError(f"unknown semiregular search strategy {strategy!r}")
    cfg = resolve(config)
    g, m = d.group, d.m
    degree = d.n_vertices
    ambient = automorphisms(ColoredDigraph.from_adjacency(d.adjacency), "fixed", cfg)
    if same_orbit_set:
        w_group = automorphisms(ColoredDigraph.from_mcayley(d), "fixed", cfg)
    else:
        w_group = ambient
    if strategy == "auto":
        strategy = "listing" if w_group.order() <= cfg.element_cap else "labeling"
    logger.info(
        "semiregular_search(%s, m=%d, same_orbit_set=%s): |Aut|=%d |W|=%d by %s",
        g.name,
        m,
        same_orbit_set,
        ambient.order(),
        w_group.order(),
        strategy,
    )
    if strategy == "listing":
        w_elements = w_group.elements(cap=cfg.element_cap)
        wanted = {g.element_order(x) for x in g.generating_sequence()}
        pools = _pools(w_elements, wanted)
        logger.debug("uniform pools: %s", {k: len(v) for k, v in sorted(pools.items())})
        found, nodes = _search(g, degree, w_group, w_elements, pools, cfg.search_budget)
    else:
        found, nodes = _labeling_search(d, w_group, same_orbit_set, cfg)

    regular = right_regular(g, m)
    regular_images = [right_translation(g, h, m) for h in g.generating_sequence()]
    classes = [SemiregularClass(regular, regular_images, is_right_regular=True, hits=0)]
    for members, images in found.items():
        h = PermGroup(images, degree=degree)
        for cls in classes:
            if members == frozenset(cls.group.elements()) or conjugating_element(
                ambient, cls.group, h, node_budget=cfg.search_budget, enum_cap=cfg.element_cap
            ) is not None:
                cls.hits += 1
                break
        else:
            classes.append(SemiregularClass(h, images))
    if classes[0].hits == 0:
        raise InvariantViolation("search did not reach a conjugate of R(G)")
    logger.info(
        "semiregular_search(%s): %d subgroups in %d classes after %d nodes",
        g.name,
        len(found),
        len(classes),
        nodes,
    )
    return SemiregularReport(
        classes=classes,
        nodes=nodes,
        ambient_order=ambient.order(),
        search_order=w_group.order(),
        same_orbit_set=same_orbit_set,
        ambient=ambient,
        strategy=strategy,
    )


def semiregular_subgroups(
    d: MCayleyDigraph, same_orbit_set: bool = True, config: RunConfig | None = None
) -> list[SemiregularClass]:
    """One representative per ``Aut(Gamma)``-class; the first is ``R(G)``."""
    return semiregular_search(d, same_orbit_set, config).classes


def validate_witness(
    d: MCayleyDigraph, report: SemiregularReport, cls: SemiregularClass, config=None
) -> None:
    """Re-check a non-regular class independently of the search.

    Raises
    ------
    InvariantViolation
        If the witness is not an automorphism group, not a homomorphic
        image of ``G`` of full order, not semiregular with ``m`` orbits,
        has the wrong orbit set, or is conjugate to ``R(G)``.
    """
    cfg = resolve(config)
    g, m = d.group, d.m
    h = cls.group
    if not all(d.preserved_by(p) for p in cls.images):
        raise InvariantViolation("witness generator is not an automorphism")
    phi = span_images(g, g.generating_sequence(), cls.images, d.n_vertices)
    if phi is None or len(phi) != g.order or h.order() != g.order:
        raise InvariantViolation("witness is not isomorphic to the group")
    semiregular, orbit_count = h.is_semiregular()
    if not semiregular or orbit_count != m:
        raise InvariantViolation("witness is not semiregular with m orbits")
    if report.same_orbit_set:
        parts = [list(p) for p in d.parts]
        if h.orbits() != parts:
            raise InvariantViolation("witness orbits differ from the parts")
    regular = right_regular(g, m)
    if conjugating_element(
        report.ambient, regular, h, node_budget=cfg.search_budget, enum_cap=cfg.element_cap
    ) is not None:
        raise InvariantViolation("witness is conjugate to R(G)")


__all__ = [
    "SemiregularClass",
    "SemiregularReport",
    "semiregular_search",
    "semiregular_subgroups",
    "validate_witness",
    "span_images",
]

# EOF

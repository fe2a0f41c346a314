"""Matching expander for clique-union instances.

Guarantees a (not necessarily rainbow) matching of size n_colors whenever
every color class spans at least 2n+2m vertices and pair multiplicities are
at most m.  A maximal matching that is still short admits a reconfiguration:
vertices reachable from the free set through high-multiplicity attachment
points can be released by a backtrack-free pointer chase, which frees both
endpoints of some edge and lets the matching grow.
"""

from __future__ import annotations

import math
from typing import Iterable, Optional

from ..errors import AugmentationStalled, HypothesisViolated
from ..graph import ColoredMultigraph, ColorClassKind, validate


def _color_spans(graph: ColoredMultigraph) -> list[int]:
    spans = []
    for c in range(graph.n_colors):
        support: set[int] = set()
        for eid in graph.color_edges[c]:
            u, v, _ = graph.edges[eid]
            support.update((u, v))
        spans.append(len(support))
    return spans


class _Expander:
    def __init__(self, graph: ColoredMultigraph, initial: Optional[Iterable[int]]):
        self.graph = graph
        self.mate: dict[int, int] = {}       # vertex -> partner
        self.match_edge: dict[int, int] = {}  # min(u,v) of a matched pair -> edge id
        if initial:
            for eid in initial:
                u, v, _ = graph.edges[eid]
                if u in self.mate or v in self.mate:
                    raise ValueError("initial matching is not vertex-disjoint")
                self._add(u, v, eid)

    def _add(self, u: int, v: int, eid: int) -> None:
        self.mate[u] = v
        self.mate[v] = u
        self.match_edge[min(u, v)] = eid

    def _remove(self, u: int, v: int) -> None:
        del self.mate[u]
        del self.mate[v]
        del self.match_edge[min(u, v)]

    @property
    def size(self) -> int:
        return len(self.match_edge)

    def edge_ids(self) -> list[int]:
        return sorted(self.match_edge.values())

    def extend_greedy(self) -> None:
        for eid, (u, v, _) in enumerate(self.graph.edges):
            if u not in self.mate and v not in self.mate:
                self._add(u, v, eid)

    # -- reconfiguration ---------------------------------------------------

    def _build_levels(self) -> tuple[dict[int, int], Optional[tuple[int, int, int]]]:
        """Level map over free vertices (0) and released partners (1, 2, ...).

        Returns the levels and, if present, an edge (u, v, eid) with both
        endpoints levelled: the augmentation opportunity.
        """
        g = self.graph
        m = max(1, g.max_multiplicity())
        level: dict[int, int] = {v: 0 for v in range(g.n_vertices)
                                 if v not in self.mate}
        unassigned = set(self.match_edge.values())
        lvl = 0
        while unassigned:
            lvl += 1
            new_edges = []
            for eid in unassigned:
                u, v, _ = g.edges[eid]
                for x, partner in ((u, v), (v, u)):
                    count = sum(1 for ie in g.incident[x]
                                if self._other(ie, x) in level)
                    if count >= m + 1:
                        new_edges.append((eid, partner))
                        break
            if not new_edges:
                break
            for eid, partner in new_edges:
                level[partner] = lvl
                unassigned.discard(eid)
            hit = self._find_internal_edge(level)
            if hit is not None:
                return level, hit
        return level, self._find_internal_edge(level)

    def _other(self, eid: int, x: int) -> int:
        u, v, _ = self.graph.edges[eid]
        return v if u == x else u

    def _find_internal_edge(self, level: dict[int, int]
                            ) -> Optional[tuple[int, int, int]]:
        for eid, (u, v, _) in enumerate(self.graph.edges):
            if u in level and v in level:
                return (u, v, eid)
        return None

    def _pick(self, x: int, below: int, level: dict[int, int],
              forbid: set[int]) -> tuple[int, int]:
        """Witness edge from x to a levelled vertex strictly below `below`."""
        for eid in self.graph.incident[x]:
            t = self._other(eid, x)
            if t in forbid:
                continue
            if level.get(t, below) < below:
                return t, eid
        raise AugmentationStalled(f"no witness edge below level {below} at vertex {x}")

    def _release(self, u: int, v: int, level: dict[int, int]) -> None:
        """Rewire the matching so that both u and v end up uncovered.

        Strictly descends through levels; all witness picks happen before any
        rewiring, so the chase never backtracks.
        """
        lu, lv = level[u], level[v]
        if lu < lv:
            u, v = v, u
            lu, lv = lv, lu
        if lu == 0:
            return  # both already free
        x = self.mate[u]
        if lv < lu:
            u2, eid2 = self._pick(x, lu, level, forbid={v})
            self._release(u2, v, level)
            self._remove(x, u)
            self._add(x, u2, eid2)
        else:
            y = self.mate[v]
            u2, eid2 = self._pick(x, lu, level, forbid=set())
            v2, eid3 = self._pick(y, lu, level, forbid={u2})
            self._release(u2, v2, level)
            self._remove(x, u)
            self._remove(y, v)
            self._add(x, u2, eid2)
            self._add(y, v2, eid3)


def expander_matching(graph: ColoredMultigraph, m: Optional[int] = None,
                      target: Optional[int] = None,
                      initial: Optional[Iterable[int]] = None) -> list[int]:
    """Matching of size >= n_colors in a qualifying clique-union instance.

    m defaults to the realized maximum pair multiplicity.  Raises
    HypothesisViolated when a color class spans fewer than 2n+2m vertices (or
    is not a clique union), AugmentationStalled past the n^2*m iteration cap.
    """
    report = validate(graph, ColorClassKind.CLIQUE_UNION)
    if not report.valid:
        raise HypothesisViolated(f"not a clique union: {report.witnesses[:5]}")
    realized = max(1, graph.max_multiplicity())
    if m is None:
        m = realized
    elif realized > m:
        raise HypothesisViolated(f"multiplicity {realized} exceeds cap {m}")
    n = graph.n_colors if target is None else target
    short = [c for c, s in enumerate(_color_spans(graph)) if s < 2 * n + 2 * m]
    if short:
        raise HypothesisViolated(
            f"colors {short[:5]} span fewer than 2n+2m = {2 * n + 2 * m} vertices")

    exp = _Expander(graph, initial)
    cap = max(1, n * n * m)
    iterations = 0
    exp.extend_greedy()
    while exp.size < n:
        iterations += 1
        if iterations > cap:
            raise AugmentationStalled(f"iteration cap {cap} reached at size {exp.size}")
        level, hit = exp._build_levels()
        if hit is None:
            raise AugmentationStalled(
                f"no augmentation found at size {exp.size} (expected by hypothesis)")
        u, v, eid = hit
        exp._release(u, v, level)
        exp._add(u, v, eid)
        exp.extend_greedy()
    return exp.edge_ids()


class _CliqueState:
    """Alive-edge bookkeeping with triangle substitution on deletion."""

    def __init__(self, graph: ColoredMultigraph,
                 colors: set[int], avoid: set[int]):
        self.graph = graph
        self.alive: set[int] = set()
        self.triangle_of: dict[int, tuple[int, ...]] = {}  # edge id -> triangle edge ids
        report = validate(graph, ColorClassKind.CLIQUE_UNION)
        if not report.valid:
            raise HypothesisViolated(f"not a clique union: {report.witnesses[:5]}")
        for c in colors:
            deco = report.decompositions[c]
            index: dict[tuple[int, int], list[int]] = {}
            for eid in graph.color_edges[c]:
                u, v, _ = graph.edges[eid]
                index.setdefault((min(u, v), max(u, v)), []).append(eid)
            for a, b in deco.pair_edges:
                eid = index[(min(a, b), max(a, b))].pop(0)
                self.alive.add(eid)
            for a, b, d in deco.triangles:
                tri = tuple(index[(min(x, y), max(x, y))].pop(0)
                            for x, y in ((a, b), (a, d), (b, d)))
                self.alive.update(tri)
                for eid in tri:
                    self.triangle_of[eid] = tri
        if avoid:
            for eid in list(self.alive):
                u, v, _ = graph.edges[eid]
                if u in avoid and v in avoid:
                    self.delete(eid)

    def delete(self, eid: int) -> None:
        if eid not in self.alive:
            return
        self.alive.discard(eid)
        tri = self.triangle_of.get(eid)
        if tri is not None:
            survivors = [e for e in tri if e in self.alive]
            # keep one edge of the broken triangle so the class stays a clique union
            for e in survivors[1:]:
                self.alive.discard(e)
            for e in tri:
                self.triangle_of.pop(e, None)

    def build(self, colors: set[int]) -> tuple[ColoredMultigraph, list[int]]:
        ids = sorted(eid for eid in self.alive
                     if self.graph.edges[eid][2] in colors)
        # colors are re-indexed densely for the working instance
        order = sorted(colors)
        remap = {c: i for i, c in enumerate(order)}
        edges = [(self.graph.edges[eid][0], self.graph.edges[eid][1],
                  remap[self.graph.edges[eid][2]]) for eid in ids]
        sub = ColoredMultigraph(self.graph.n_vertices, len(order), edges)
        return sub, ids


def edge_disjoint_matchings(graph: ColoredMultigraph, count_target: int,
                            colors: Optional[set[int]] = None,
                            avoid_vertices: Optional[set[int]] = None
                            ) -> list[list[int]]:
    """Repeatedly extract full-size matchings, deleting each one's edges and
    dropping colors it used more than sqrt(n) times.

    Stops early when the spanning hypothesis degrades below 2n+2m.  Returned
    matchings are lists of source-graph edge ids with empty pairwise
    intersections.
    """
    n0 = graph.n_colors
    active = set(range(n0)) if colors is None else set(colors)
    state = _CliqueState(graph, active, avoid_vertices or set())
    heavy_cut = math.sqrt(n0)
    results: list[list[int]] = []
    while len(results) < count_target and active:
        sub, ids = state.build(active)
        spans = _color_spans(sub)
        m = max(1, sub.max_multiplicity())
        if any(s < 2 * sub.n_colors + 2 * m for s in spans):
            break
        local = expander_matching(sub)
        orig = [ids[eid] for eid in local]
        results.append(sorted(orig))
        used_per_color: dict[int, int] = {}
        for eid in orig:
            c = graph.edges[eid][2]
            used_per_color[c] = used_per_color.get(c, 0) + 1
            state.delete(eid)
        active -= {c for c, k in used_per_color.items() if k > heavy_cut}
    return results

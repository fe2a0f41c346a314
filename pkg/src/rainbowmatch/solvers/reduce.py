"""Randomized reduction from 2-factorized to bipartite instances.

Each color class is a disjoint union of cycles.  Give every cycle an
independent random direction, split the vertices into X / Y uniformly, and
keep only the edges directed from X to Y.  The survivors form a bipartite
instance whose rainbow matchings are rainbow matchings of the source graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..errors import NotTwoFactorized
from ..graph import (ColoredMultigraph, ColorClassKind, RainbowMatching,
                     validate)


def _color_cycles(graph: ColoredMultigraph, c: int) -> list[list[tuple[int, int, int]]]:
    """Cycles of color c as directed traversals [(eid, u, v), ...]."""
    at: dict[int, list[int]] = {}
    for eid in graph.color_edges[c]:
        u, v, _ = graph.edges[eid]
        at.setdefault(u, []).append(eid)
        at.setdefault(v, []).append(eid)
    used: set[int] = set()
    cycles = []
    for start_eid in graph.color_edges[c]:
        if start_eid in used:
            continue
        u0, v0, _ = graph.edges[start_eid]
        walk = [(start_eid, u0, v0)]
        used.add(start_eid)
        here = v0
        while here != u0:
            nxt = next(e for e in at[here] if e not in used)
            a, b, _ = graph.edges[nxt]
            there = b if a == here else a
            walk.append((nxt, here, there))
            used.add(nxt)
            here = there
        cycles.append(walk)
    return cycles


@dataclass
class BipartiteReduction:
    source: ColoredMultigraph
    graph: ColoredMultigraph     # bipartite survivors, original colors
    sides: list[int]             # 0 = X, 1 = Y per source vertex
    edge_map: list[int]          # reduced edge id -> source edge id

    def lift(self, matching: RainbowMatching) -> RainbowMatching:
        """Map a rainbow matching of the reduced graph back to the source."""
        return RainbowMatching(pairs=[(self.edge_map[eid], c)
                                      for eid, c in matching.pairs])


def orient_bipartition_reduce(graph: ColoredMultigraph,
                              seed: int = 0) -> BipartiteReduction:
    """Orient each color cycle at random, split vertices into X/Y, and keep
    the X -> Y edges as an undirected bipartite instance with a lift back."""
    report = validate(graph, ColorClassKind.TWO_FACTOR)
    if not report.valid:
        raise NotTwoFactorized(f"witnesses: {report.witnesses[:5]}")
    rng = random.Random(seed)
    sides = [0 if rng.random() < 0.5 else 1 for _ in range(graph.n_vertices)]

    kept: list[tuple[int, int, int]] = []
    edge_map: list[int] = []
    for c in range(graph.n_colors):
        for walk in _color_cycles(graph, c):
            flip = rng.random() < 0.5
            for eid, u, v in walk:
                if flip:
                    u, v = v, u
                if sides[u] == 0 and sides[v] == 1:
                    kept.append((u, v, c))
                    edge_map.append(eid)
    reduced = ColoredMultigraph(graph.n_vertices, graph.n_colors, kept,
                                sides=list(sides))
    return BipartiteReduction(source=graph, graph=reduced,
                              sides=sides, edge_map=edge_map)

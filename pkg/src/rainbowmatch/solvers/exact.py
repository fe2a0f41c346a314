"""Exact maximum rainbow matching by branch and bound.

Ground-truth oracle for tests and lower-bound certification.  Branches on the
scarcest live color (take each of its live edges, or skip the color); prunes
with the smaller of two bounds: the number of live colors, and a vertex
packing bound summed over connected components of the live edges.
"""

from __future__ import annotations

import time
from typing import Optional

from ..graph import ColoredMultigraph, RainbowMatching
from .augment import AugmentConfig, augment
from .greedy import greedy_maximal


def _packing_bound(graph: ColoredMultigraph, live: list[int]) -> int:
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for eid in live:
        u, v, _ = graph.edges[eid]
        for w in (u, v):
            parent.setdefault(w, w)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    sizes: dict[int, int] = {}
    for w in parent:
        r = find(w)
        sizes[r] = sizes.get(r, 0) + 1
    return sum(s // 2 for s in sizes.values())


def exact_max_rainbow(graph: ColoredMultigraph,
                      time_limit: Optional[float] = None
                      ) -> tuple[int, RainbowMatching, bool]:
    """(optimum size, witness matching, certified flag).

    certified is True iff the search ran to completion within time_limit
    (seconds; None means no limit).  The incumbent is seeded with
    greedy + augmentation, so the result never trails the heuristics.
    """
    seed_matching = augment(graph, greedy_maximal(graph, "rare_color_first", 0),
                            AugmentConfig(seed=0))
    best_pairs = list(seed_matching.pairs)
    best_size = len(best_pairs)

    deadline = None if time_limit is None else time.monotonic() + time_limit
    used_v = bytearray(graph.n_vertices)
    banned_c = bytearray(graph.n_colors)
    stack: list[tuple[int, int]] = []
    timed_out = False
    ticks = 0

    def live_by_color() -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for c in range(graph.n_colors):
            if banned_c[c]:
                continue
            ids = [eid for eid in graph.color_edges[c]
                   if not used_v[graph.edges[eid][0]]
                   and not used_v[graph.edges[eid][1]]]
            if ids:
                out[c] = ids
        return out

    def dfs() -> None:
        nonlocal best_size, best_pairs, timed_out, ticks
        if timed_out:
            return
        ticks += 1
        if deadline is not None and ticks % 64 == 0 and time.monotonic() > deadline:
            timed_out = True
            return
        size = len(stack)
        if size > best_size:
            best_size = size
            best_pairs = list(stack)
        live = live_by_color()
        if not live:
            return
        flat = [eid for ids in live.values() for eid in ids]
        if size + min(len(live), _packing_bound(graph, flat)) <= best_size:
            return
        c = min(live, key=lambda cc: (len(live[cc]), cc))
        for eid in live[c]:
            u, v, _ = graph.edges[eid]
            used_v[u] = used_v[v] = 1
            banned_c[c] = 1
            stack.append((eid, c))
            dfs()
            stack.pop()
            used_v[u] = used_v[v] = 0
            banned_c[c] = 0
            if timed_out:
                return
        banned_c[c] = 1
        dfs()
        banned_c[c] = 0

    dfs()
    return best_size, RainbowMatching(pairs=sorted(best_pairs)), not timed_out

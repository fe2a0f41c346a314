"""Seeded instance generators for every family used by the verification harness.

All generators are pure functions of their parameters and seed; the same
inputs always produce an identical edge list.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import GenerationStuck, ParameterViolation, PoolTooSmall
from .graph import ColoredMultigraph, _pair


class Family(Enum):
    LATIN_CAYLEY = "latin_cayley"
    LATIN_RANDOM = "latin_random"
    AB_BIPARTITE = "ab_bipartite"
    AB_GENERAL = "ab_general"
    GRINBLAT = "grinblat"
    TRIANGLE_LB = "triangle_lb"
    TWO_K4 = "two_k4"
    MULTIPLICITY_LB = "multiplicity_lb"
    CIRCULANT_TWO_FACTOR = "circulant_two_factor"
    SYMMETRIC_LATIN_TWO_FACTOR = "symmetric_latin_two_factor"


@dataclass
class GeneratorSpec:
    """Bundle of family + parameters, mostly for the CLI."""

    family: Family
    n: int = 0
    v: int = 0
    extra: int = 0
    m: int = 0
    d: int = 0
    seed: int = 0

    def generate(self) -> ColoredMultigraph:
        f = self.family
        if f is Family.LATIN_CAYLEY:
            return gen_latin(self.n, "cayley", self.seed)
        if f is Family.LATIN_RANDOM:
            return gen_latin(self.n, "random", self.seed)
        if f is Family.AB_BIPARTITE:
            return gen_ab(self.n, self.extra, True, self.seed)
        if f is Family.AB_GENERAL:
            return gen_ab(self.n, self.extra, False, self.seed)
        if f is Family.GRINBLAT:
            return gen_grinblat(self.n, self.v, self.m, self.seed)
        if f is Family.TRIANGLE_LB:
            return gen_triangle_lb(self.n)
        if f is Family.TWO_K4:
            return gen_two_k4()
        if f is Family.MULTIPLICITY_LB:
            return gen_multiplicity_lb(self.n, self.d, self.seed)
        if f is Family.CIRCULANT_TWO_FACTOR:
            return gen_two_factorized(self.d, "circulant", self.extra, self.seed)
        if f is Family.SYMMETRIC_LATIN_TWO_FACTOR:
            return gen_two_factorized(self.d, "symmetric_latin", self.extra, self.seed)
        raise ParameterViolation(f"unknown family {f}")


def _latin_cayley(n: int) -> list[list[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def _latin_shuffle(square: list[list[int]], n: int, rng: random.Random,
                   steps: int) -> None:
    """Randomize a Latin square in place by row-pair cycle swaps.

    Picking two rows and swapping their entries along one cycle of the
    two-row symbol permutation preserves the Latin property.  Not a uniform
    sampler, but reachable squares are well mixed after ~10*n^3 steps.
    """
    if n < 2:
        return
    for _ in range(steps):
        r1, r2 = rng.sample(range(n), 2)
        start = rng.randrange(n)
        # follow the cycle of columns alternating between the two rows
        col = start
        cycle = []
        while True:
            cycle.append(col)
            sym = square[r2][col]
            col = square[r1].index(sym)
            if col == start:
                break
        for col in cycle:
            square[r1][col], square[r2][col] = square[r2][col], square[r1][col]


def gen_latin(n: int, mode: str = "cayley", seed: int = 0) -> ColoredMultigraph:
    """Properly n-edge-coloured K_{n,n} from a Latin square of order n.

    Vertices 0..n-1 are rows, n..2n-1 are columns; the edge (i, n+j) gets the
    symbol in cell (i, j).  Cayley mode uses the addition table of Z_n; random
    mode shuffles it with seeded cycle swaps.
    """
    if n < 1:
        raise ParameterViolation("n >= 1 required")
    square = _latin_cayley(n)
    if mode == "random":
        _latin_shuffle(square, n, random.Random(seed), 10 * n ** 3)
    elif mode != "cayley":
        raise ParameterViolation(f"unknown latin mode {mode!r}")
    edges = [(i, n + j, square[i][j]) for i in range(n) for j in range(n)]
    sides = [0] * n + [1] * n
    return ColoredMultigraph(2 * n, n, edges, sides=sides)


def gen_ab(n: int, extra: int, bipartite: bool, seed: int) -> ColoredMultigraph:
    """n colors, each a uniformly placed matching of exactly n+extra edges.

    The vertex pool has 2(n+extra) + ceil(n/2) vertices: large enough for the
    per-color matchings, small enough that colors interact.
    """
    if n < 1 or extra < 0:
        raise ParameterViolation("n >= 1 and extra >= 0 required")
    size = n + extra
    pool = 2 * size + math.ceil(n / 2)
    rng = random.Random(seed)
    edges: list[tuple[int, int, int]] = []
    sides: Optional[list[int]] = None
    if bipartite:
        left = pool // 2 + pool % 2
        right = pool - left
        if left < size or right < size:
            raise PoolTooSmall(f"pool {pool} cannot host bipartite matchings of {size}")
        sides = [0] * left + [1] * right
        left_ids = list(range(left))
        right_ids = list(range(left, pool))
        for c in range(n):
            rng.shuffle(left_ids)
            rng.shuffle(right_ids)
            for k in range(size):
                edges.append((left_ids[k], right_ids[k], c))
    else:
        if pool < 2 * size:
            raise PoolTooSmall(f"pool {pool} cannot host a matching of {size}")
        ids = list(range(pool))
        for c in range(n):
            rng.shuffle(ids)
            for k in range(size):
                edges.append((ids[2 * k], ids[2 * k + 1], c))
    return ColoredMultigraph(pool, n, edges, sides=sides)


def gen_grinblat(n: int, v: int, m: int, seed: int) -> ColoredMultigraph:
    """Each color class a random disjoint union of K2/K3 cliques spanning >= v vertices.

    The pair multiplicity cap m is enforced globally by rejecting clique
    placements that would exceed it; after 1000*n rejections the (n, v, m)
    combination is declared infeasible.
    """
    if n < 1 or v < 2 or m < 1:
        raise ParameterViolation("need n >= 1, v >= 2, m >= 1")
    pool = v + math.ceil(n / 2)
    rng = random.Random(seed)
    mult: dict[tuple[int, int], int] = {}
    edges: list[tuple[int, int, int]] = []
    budget = 1000 * n
    # disjoint cliques give each pair at most one edge per color, so a cap of
    # n or more can never bind and the rejection bookkeeping is skipped
    unchecked = m >= n

    def place(verts: list[int], c: int) -> bool:
        pairs = ([_pair(verts[0], verts[1])] if len(verts) == 2 else
                 [_pair(verts[0], verts[1]), _pair(verts[0], verts[2]),
                  _pair(verts[1], verts[2])])
        if any(mult.get(p, 0) >= m for p in pairs):
            return False
        for p in pairs:
            mult[p] = mult.get(p, 0) + 1
        for p in pairs:
            edges.append((p[0], p[1], c))
        return True

    append = edges.append
    random_ = rng.random
    for c in range(n):
        ratio = random_()  # triangle share of this color's clique budget
        available = list(range(pool))
        rng.shuffle(available)
        idx = 0
        spanned = 0
        while spanned < v:
            left = pool - idx
            want3 = random_() < ratio and left >= 3 and v - spanned >= 3
            k = 3 if want3 else 2
            if left < k:
                raise GenerationStuck(
                    f"color {c}: pool exhausted at spanned={spanned} < v={v}")
            if unchecked:
                a = available[idx]
                b = available[idx + 1]
                if k == 2:
                    append((a, b, c) if a < b else (b, a, c))
                else:
                    d = available[idx + 2]
                    append((a, b, c) if a < b else (b, a, c))
                    append((a, d, c) if a < d else (d, a, c))
                    append((b, d, c) if b < d else (d, b, c))
                idx += k
                spanned += k
            elif place(available[idx:idx + k], c):
                idx += k
                spanned += k
            else:
                budget -= 1
                if budget <= 0:
                    raise GenerationStuck(f"(n={n}, v={v}, m={m}) looks infeasible")
                tail = available[idx:]
                rng.shuffle(tail)
                available[idx:] = tail
    return ColoredMultigraph(pool, n, edges)


def gen_triangle_lb(n: int) -> ColoredMultigraph:
    """n-1 disjoint triangles, each repeated in every one of the n colors."""
    if n < 2:
        raise ParameterViolation("n >= 2 required")
    edges = []
    for c in range(n):
        for t in range(n - 1):
            a, b, d = 3 * t, 3 * t + 1, 3 * t + 2
            edges.extend([(a, b, c), (a, d, c), (b, d, c)])
    return ColoredMultigraph(3 * (n - 1), n, edges)


def gen_two_k4() -> ColoredMultigraph:
    """Proper 3-edge-colouring of two disjoint K4s; max rainbow matching is 2."""
    edges = []
    for base in (0, 4):
        a, b, c, d = base, base + 1, base + 2, base + 3
        edges.extend([(a, b, 0), (c, d, 0),
                      (a, c, 1), (b, d, 1),
                      (a, d, 2), (b, c, 2)])
    return ColoredMultigraph(8, 3, edges)


def gen_multiplicity_lb(n: int, d: int, seed: int) -> ColoredMultigraph:
    """(n-1)/d disjoint (2d+1)-vertex blocks; per color and block a random
    spanning subgraph of d-1 disjoint edges plus one triangle.

    No matching of size n exists since each block hosts at most d edges.
    The asymptotic size bound n > 10*d^3*log(d) is not enforced: desk-scale
    instances deliberately waive it.
    """
    if d < 2:
        raise ParameterViolation("d >= 2 required")
    if (n - 1) % d != 0 or n <= d:
        raise ParameterViolation("d must divide n-1 and n > d")
    blocks = (n - 1) // d
    block_size = 2 * d + 1
    rng = random.Random(seed)
    edges = []
    for c in range(n):
        for b in range(blocks):
            verts = list(range(b * block_size, (b + 1) * block_size))
            rng.shuffle(verts)
            x, y, z = verts[:3]
            edges.extend([(x, y, c), (x, z, c), (y, z, c)])
            rest = verts[3:]
            for k in range(0, len(rest), 2):
                edges.append((rest[k], rest[k + 1], c))
    return ColoredMultigraph(blocks * block_size, n, edges)


def _round_robin_square(n: int) -> list[list[int]]:
    """Symmetric order-n Latin-style table with constant diagonal, n even.

    Off-diagonal entries encode a 1-factorization of K_n with n-1 symbols
    1..n-1 (circle method); the diagonal carries symbol 0.
    """
    if n % 2 != 0:
        raise ParameterViolation("symmetric square with constant diagonal needs even n")
    s = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        for j in range(n - 1):
            if i != j:
                s[i][j] = (i + j) % (n - 1) + 1
        s[i][n - 1] = s[n - 1][i] = (2 * i) % (n - 1) + 1
    return s


def gen_two_factorized(d: int, mode: str, extra_vertices: int = 0,
                       seed: int = 0) -> ColoredMultigraph:
    """2d-regular graph whose d color classes are all 2-factors.

    circulant: color i is the offset-(i+1) circulant 2-factor on Z_N with
    N = 2d+1+extra_vertices.  symmetric_latin: doubled-vertex construction
    from a symmetric order-(d+1) square with constant diagonal (d odd).
    """
    if d < 1:
        raise ParameterViolation("d >= 1 required")
    if mode == "circulant":
        n_vertices = 2 * d + 1 + extra_vertices
        if n_vertices < 2 * d + 1:
            raise ParameterViolation("need at least 2d+1 vertices")
        for off in range(1, d + 1):
            if off % n_vertices == 0 or 2 * off % n_vertices == 0:
                raise ParameterViolation(f"degenerate offset {off} on Z_{n_vertices}")
        edges = []
        for c in range(d):
            off = c + 1
            for vtx in range(n_vertices):
                edges.append((vtx, (vtx + off) % n_vertices, c))
        # each edge was produced once per direction start; dedupe by keeping v < w walks
        edges = [(u, w, c) for (u, w, c) in edges]
        dedup = []
        seen = set()
        for u, w, c in edges:
            key = (_pair(u, w), c)
            if key not in seen:
                seen.add(key)
                dedup.append((_pair(u, w)[0], _pair(u, w)[1], c))
        return ColoredMultigraph(n_vertices, d, dedup)
    if mode == "symmetric_latin":
        n = d + 1
        square = _round_robin_square(n)
        # vertices i (minus copy) and n+i (plus copy)
        edges = []
        for i in range(n):
            for j in range(i + 1, n):
                c = square[i][j] - 1
                for a in (i, n + i):
                    for b in (j, n + j):
                        edges.append((a, b, c))
        return ColoredMultigraph(2 * n, d, edges)
    raise ParameterViolation(f"unknown two-factor mode {mode!r}")

import math

import pytest

from rainbowmatch.errors import HypothesisViolated
from rainbowmatch.generators import gen_grinblat, gen_triangle_lb
from rainbowmatch.graph import ColoredMultigraph
from rainbowmatch.solvers import edge_disjoint_matchings, expander_matching


def assert_matching(graph, edge_ids):
    seen: set = set()
    for eid in edge_ids:
        u, v, _ = graph.edges[eid]
        assert u not in seen and v not in seen
        seen.update((u, v))


def test_single_color_single_edge():
    # one color spanning 4 vertices (two disjoint edges) with m = 1
    g = ColoredMultigraph(4, 1, [(0, 1, 0), (2, 3, 0)])
    ids = expander_matching(g, m=1)
    assert len(ids) >= 1
    assert_matching(g, ids)


@pytest.mark.parametrize("n,m", [(20, 1), (50, 3)])
def test_full_size_matching_on_qualifying_instances(n, m):
    for seed in range(5):
        g = gen_grinblat(n, 2 * n + 2 * m, m, seed)
        ids = expander_matching(g)
        assert len(ids) >= n
        assert_matching(g, ids)


def test_hypothesis_violation_rejected():
    # triangle construction: 3n-3 spanned vertices with multiplicity n is far
    # below the 2n+2m threshold
    g = gen_triangle_lb(10)
    with pytest.raises(HypothesisViolated):
        expander_matching(g)


def test_multiplicity_cap_parameter_enforced():
    g = gen_grinblat(10, 24, 2, 0)
    if g.max_multiplicity() > 1:
        with pytest.raises(HypothesisViolated):
            expander_matching(g, m=1)


def test_count_target_one_equals_single_run():
    g = gen_grinblat(16, 2 * 16 + 2, 1, 4)
    [only] = edge_disjoint_matchings(g, 1)
    assert len(only) >= 16
    assert_matching(g, only)


def test_two_edge_disjoint_matchings():
    n = 16
    g = gen_grinblat(n, 2 * n + 2 + math.ceil(n ** 0.75), 1, 3)
    matchings = edge_disjoint_matchings(g, 2)
    assert len(matchings) == 2
    assert not (set(matchings[0]) & set(matchings[1]))
    for m in matchings:
        assert_matching(g, m)
        assert len(m) >= n - math.ceil(n ** 0.75)


def test_disjoint_matchings_across_seeds():
    n = 25
    target = math.ceil(n ** 0.25)
    for seed in range(3):
        g = gen_grinblat(n, 2 * n + 2 + math.ceil(n ** 0.75), 1, seed)
        ms = edge_disjoint_matchings(g, target)
        for i in range(len(ms)):
            assert_matching(g, ms[i])
            for j in range(i + 1, len(ms)):
                assert not (set(ms[i]) & set(ms[j]))

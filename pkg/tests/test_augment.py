from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowmatch.generators import gen_ab, gen_grinblat, gen_latin
from rainbowmatch.graph import RainbowMatching, is_rainbow_matching
from rainbowmatch.solvers import AugmentConfig, augment, greedy_maximal


def test_augment_from_empty_is_valid():
    g = gen_latin(6, "random", 2)
    m = augment(g, RainbowMatching(), AugmentConfig(seed=1))
    ok, why = is_rainbow_matching(g, m)
    assert ok, why
    assert len(m) >= 1


def test_augment_reaches_n_minus_one_on_odd_cayley():
    # odd-order Cayley tables have full transversals; the bounded-depth
    # augmenter must get within one of it from a greedy start
    g = gen_latin(7, "cayley", 0)
    start = greedy_maximal(g, "input", 0)
    out = augment(g, start, AugmentConfig(seed=5))
    assert len(out) >= 6


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 2 ** 32))
def test_augment_monotone_and_valid(seed):
    g = gen_ab(12, 1, False, seed)
    start = greedy_maximal(g, "random", seed)
    out = augment(g, start, AugmentConfig(seed=seed))
    assert len(out) >= len(start)
    ok, why = is_rainbow_matching(g, out)
    assert ok, why


@settings(max_examples=10, deadline=None)
@given(seed=st.integers(0, 2 ** 32))
def test_augment_idempotent_at_fixpoint(seed):
    g = gen_grinblat(10, 30, 2, seed)
    cfg = AugmentConfig(seed=7)
    once = augment(g, greedy_maximal(g, "input", 0), cfg)
    twice = augment(g, once, cfg)
    assert sorted(twice.pairs) == sorted(once.pairs)


def test_budget_exhaustion_returns_current_matching():
    g = gen_ab(20, 0, False, 3)
    cfg = AugmentConfig(node_budget=5, seed=0)
    start = greedy_maximal(g, "input", 0)
    out = augment(g, start, cfg)
    assert len(out) >= len(start)
    ok, _ = is_rainbow_matching(g, out)
    assert ok

import math

import pytest

from rainbowmatch.generators import gen_ab, gen_grinblat
from rainbowmatch.graph import is_rainbow_matching
from rainbowmatch.solvers import SamplingConfig, sampling_solve


def test_p_out_of_range_rejected():
    g = gen_ab(5, 0, False, 0)
    with pytest.raises(ValueError):
        sampling_solve(g, SamplingConfig(p=1.0))


def test_report_fields_consistent():
    n = 32
    g = gen_ab(n, math.ceil(7 * n ** 0.75), True, 17)
    cfg = SamplingConfig(p=min(0.5, 2 * n ** -0.25), seed=4)
    report = sampling_solve(g, cfg)
    ok, why = is_rainbow_matching(g, report.matching)
    assert ok, why
    assert report.defect == n - len(report.matching.colors())
    assert report.missing_colors == sorted(set(range(n)) - report.matching.colors())
    if report.defect == 0:
        assert report.matching.colors() == set(range(n))
    doc = report.to_json_dict(g)
    assert set(doc) == {"size", "defect", "missing_colors", "matching",
                        "phases", "seed", "elapsed_ms", "optimal"}
    assert doc["size"] == len(report.matching)


def test_completion_uses_only_weak_missing_colors():
    n = 24
    g = gen_grinblat(n, 3 * n + math.ceil(40 * n ** 0.75), n, 3)
    report = sampling_solve(g, SamplingConfig(p=0.5, seed=9, repair=False))
    # phase log alternates weak_greedy / weak_augment / complete per attempt
    phases = [name for name, _, _ in report.phase_log]
    assert phases[0] == "weak_greedy"
    assert "complete" in phases
    for name, before, after in report.phase_log:
        assert after >= before or name == "complete"


def test_same_seed_same_matching():
    g = gen_ab(20, 6, False, 5)
    cfg = SamplingConfig(p=0.4, seed=77)
    a = sampling_solve(g, cfg)
    b = sampling_solve(g, cfg)
    assert a.matching.pairs == b.matching.pairs
    assert a.seeds_used == b.seeds_used


def test_resampling_stops_at_full():
    n = 16
    g = gen_ab(n, math.ceil(7 * n ** 0.75), True, 2)
    report = sampling_solve(g, SamplingConfig(p=0.5, seed=1, max_resamples=5))
    if report.defect == 0:
        assert len(report.seeds_used) <= 5

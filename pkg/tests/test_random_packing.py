import math

import pytest

from limpack.errors import InputError
from limpack.generators import gen_complete, gen_cycle, gen_named, gen_projective, gen_random_regular
from limpack.graph_core import pairwise_distance
from limpack.random_packing import (
    LLL, SAMPLE_REPAIR, ResamplingState, lll_parameters, lll_resample, make_rng, monte_carlo_sizes,
    resolve_rate, sample_and_repair, spawn_seeds, summarize_sizes,
)
from limpack.verify import verify_k_limited


def test_zero_rate_gives_empty_packing(petersen):
    report = sample_and_repair(petersen, 2, p=0.0, seed=1)
    assert report.size == 0
    assert report.repairs == 0


def test_full_rate_keeps_everything_when_k_exceeds_degree(c6):
    report = sample_and_repair(c6, 3, p=1.0, seed=1)
    assert report.packing.vertices == frozenset(range(6))
    assert resolve_rate(c6, 3, 'auto') == 1.0


@pytest.mark.parametrize('p', [-0.1, 1.5, 'half'])
def test_invalid_rate_rejected(c6, p):
    with pytest.raises(InputError):
        sample_and_repair(c6, 2, p=p, seed=0)


def test_negative_seed_rejected(c6):
    with pytest.raises(InputError, match='seed'):
        sample_and_repair(c6, 2, seed=-1)
    with pytest.raises(InputError):
        make_rng(-5)


def test_auto_and_bound_rates_for_cubic_two():
    """auto is (C(3,2)·4)^{-1/2} = 1/√12; bound scales it by k/(k+1)"""
    g = gen_named('petersen')
    assert resolve_rate(g, 2, 'auto') == pytest.approx(1 / math.sqrt(12))
    assert resolve_rate(g, 2, 'bound') == pytest.approx(2 / (3 * math.sqrt(12)))


def test_lll_parameters_for_degree_ten():
    params = lll_parameters(10, 5)
    assert params.clamped
    assert params.epsilon1 == 0.5
    assert params.p == pytest.approx(3 / 11)
    assert params.epsilon2 == pytest.approx(3 / math.sqrt(50))
    assert not params.theorem_regime


def test_lll_parameters_for_small_degree():
    params = lll_parameters(3, 4)
    assert params.clamped
    assert params.p == pytest.approx(0.625)


def test_lll_parameters_validation():
    with pytest.raises(InputError):
        lll_parameters(1, 2)
    with pytest.raises(InputError):
        lll_parameters(5, 0)
    with pytest.raises(InputError):
        lll_parameters(5, 2, clamp=1.0)


def _corpus():
    return [gen_cycle(9), gen_named('petersen'), gen_projective(3, 1),
            gen_random_regular(30, 4, 1), gen_random_regular(40, 3, 2)]


def test_every_run_is_a_valid_packing():
    """1000 runs of both methods over five graphs with k = 2"""
    for g in _corpus():
        for seed in range(100):
            repaired = sample_and_repair(g, 2, seed=seed)
            assert verify_k_limited(g, repaired.packing.vertices, 2).valid
            resampled = lll_resample(g, 2, seed=seed)
            assert resampled.success
            assert verify_k_limited(g, resampled.packing.vertices, 2).valid


def test_sample_and_repair_meets_expectation_bound():
    """Mean size over 200 seeds is at least n/(3√3) up to two standard errors"""
    g = gen_random_regular(60, 3, 5)
    runs = monte_carlo_sizes(g, 2, range(200))
    assert runs['valid'].all()
    summary = summarize_sizes(runs)
    assert summary['runs'] == 200
    assert summary['mean'] >= 60 / (3 * math.sqrt(3)) - 2 * summary['stderr']


def test_resampling_succeeds_on_random_ten_regular_graphs():
    successes = size_events = 0
    for seed in range(100):
        g = gen_random_regular(200, 10, seed)
        report = lll_resample(g, 5, seed=seed, max_rounds=10 ** 4)
        if report.success:
            successes += 1
            size_events += report.size_event_ok
            assert verify_k_limited(g, report.packing.vertices, 5).valid
    assert successes >= 95
    assert size_events >= 90


def test_half_rate_on_c6(c6):
    for seed in range(20):
        report = sample_and_repair(c6, 2, p=0.5, seed=seed)
        assert report.p == 0.5
        assert verify_k_limited(c6, report.packing.vertices, 2).valid


def test_resampling_only_touches_distance_two():
    """Redrawing N[v] changes counts only within distance 2 of v"""
    g = gen_random_regular(40, 3, 11)
    for seed in range(10):
        state = ResamplingState(g, 2, 0.4, make_rng(seed))
        v = seed
        before = list(state.counts)
        state.resample(v)
        for x in g.vertices:
            distance = pairwise_distance(g, v, x)
            if distance is None or distance > 2:
                assert state.counts[x] == before[x]
        members = state.members()
        assert state.counts == [len(g.neighbors(x) & members) + (x in members) for x in g.vertices]
        assert state.bad_events() == [x for x in g.vertices if state.counts[x] > 2]


def test_same_seed_same_report(petersen):
    assert sample_and_repair(petersen, 2, seed=7) == sample_and_repair(petersen, 2, seed=7)
    assert lll_resample(petersen, 2, seed=7) == lll_resample(petersen, 2, seed=7)


def test_resampling_with_k_above_degree_takes_everything(c6):
    report = lll_resample(c6, 3, seed=0)
    assert report.p == 1.0
    assert report.rounds == 0
    assert report.size == 6
    assert report.size_event_ok
    assert report.to_text() == "size: 6\nrounds: 0\nclamped: false\nsize_event: true\nwitness: 0 1 2 3 4 5\n"


def test_round_limit_reports_failure():
    g = gen_complete(8)
    report = lll_resample(g, 1, seed=0, max_rounds=1, p=1.0)
    assert not report.success
    assert report.packing is None
    assert report.last_sample == frozenset(range(8))
    assert report.to_text().startswith("status: failed\nsize: 0\nrounds: 1\n")


def test_report_text(c6):
    report = sample_and_repair(c6, 3, p=1.0, seed=0)
    assert report.to_text() == "size: 6\nrounds: 0\nclamped: false\nwitness: 0 1 2 3 4 5\n"


def test_monte_carlo_columns(petersen):
    runs = monte_carlo_sizes(petersen, 2, [0, 1, 2], method=LLL)
    assert list(runs.columns) == ['seed', 'size', 'repairs', 'rounds', 'success', 'valid']
    assert list(runs['seed']) == [0, 1, 2]
    with pytest.raises(InputError):
        monte_carlo_sizes(petersen, 2, [0], method='anneal')
    assert len(monte_carlo_sizes(petersen, 1, [4, 5], method=SAMPLE_REPAIR, n_jobs=2)) == 2


def test_spawned_seeds_are_distinct_and_reproducible():
    seeds = spawn_seeds(3, 5)
    assert len(set(seeds)) == 5
    assert seeds == spawn_seeds(3, 5)

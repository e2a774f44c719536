import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entswap import rng
from entswap.experiment import (
    EnsembleResult,
    RunConfig,
    run_ensemble,
    sample_bbm,
    three_sigma,
)
from entswap.states import BELL_LABELS
from entswap.swap import outcome_probabilities, post_entropies

seeds = st.integers(min_value=0, max_value=(1 << 64) - 1)

# published reference outputs of the splitmix64 generator for seed 0
_SPLITMIX64_SEED0 = (
    0xE220A8397B1DCDAF,
    0x6E789E6AA1B965F4,
    0x06C45D188009454F,
    0xF88BB8A8724C81EC,
    0x1B39896A51A8749B,
)


def test_raw_draw_matches_published_vector():
    for i, expected in enumerate(_SPLITMIX64_SEED0):
        assert rng.raw_draw(0, i) == expected


def test_uniform_range_and_resolution():
    u = rng.uniforms(123, 0, 4096)
    assert np.all(u >= 0.0) and np.all(u < 1.0)
    # 53-bit significands: every value is a multiple of 2**-53
    assert np.all(u * 2.0**53 == np.floor(u * 2.0**53))


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(min_value=0, max_value=10_000), st.integers(min_value=1, max_value=64))
def test_vectorized_matches_scalar(seed, start, count):
    batch = rng.uniforms(seed, start, count)
    for offset in (0, count // 2, count - 1):
        assert batch[offset] == rng.uniform(seed, start + offset)


def test_mid_stream_resume():
    whole = rng.uniforms(99, 0, 100)
    assert np.array_equal(whole[40:], rng.uniforms(99, 40, 60))


def test_rng_state_walks_the_stream():
    state = rng.RngState(31, 0)
    seen = []
    for _ in range(8):
        u, state = state.draw()
        seen.append(u)
    assert state.counter == 8
    assert np.array_equal(np.array(seen), rng.uniforms(31, 0, 8))


def test_complex_normals_deterministic_and_indexed():
    z = rng.complex_normals(5, 0, 16)
    assert z.shape == (16,)
    assert np.all(np.isfinite(z))
    assert np.array_equal(z, rng.complex_normals(5, 0, 16))
    for k in (0, 7, 15):
        assert rng.complex_normals(5, 2 * k, 1)[0] == z[k]


def test_complex_normals_moments():
    z = rng.complex_normals(2024, 0, 40_000)
    assert abs(z.mean()) < 0.02
    assert abs(np.mean(np.abs(z) ** 2) - 1.0) < 0.02


def test_split_seed_deterministic_and_distinct():
    subs = [rng.split_seed(7, w) for w in range(8)]
    assert subs == [rng.split_seed(7, w) for w in range(8)]
    assert len(set(subs)) == 8
    assert 7 not in subs


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_split_seed_streams_differ_from_base(seed):
    sub = rng.split_seed(seed, 0)
    assert 0 <= sub <= (1 << 64) - 1
    if sub != seed:
        assert not np.array_equal(rng.uniforms(seed, 0, 4), rng.uniforms(sub, 0, 4))


def test_categorical_tie_goes_to_lower_label():
    probs = np.array([0.5, 0.5])
    assert rng.categorical(np.array([0.5]), probs)[0] == 0
    assert rng.categorical(np.array([np.nextafter(0.5, 1.0)]), probs)[0] == 1


def test_categorical_never_picks_zero_probability_labels():
    probs = np.array([0.0, 0.5, 0.0, 0.5])
    u = rng.uniforms(11, 0, 2000)
    picked = rng.categorical(np.concatenate([u, [0.0, 0.5]]), probs)
    assert set(np.unique(picked)) <= {1, 3}
    assert rng.categorical(np.array([0.0]), probs)[0] == 1


def test_categorical_overflow_lands_on_last_positive_label():
    # cumulative sum rounds below 1; the largest representable u exceeds it
    probs = np.array([0.1] * 7 + [0.3 - 5e-14])
    u_max = np.nextafter(1.0, 0.0)
    assert rng.categorical(np.array([u_max]), probs)[0] == 7


def test_categorical_rejects_bad_vectors():
    with pytest.raises(ValueError):
        rng.categorical(np.array([0.5]), np.array([0.7, 0.6]))
    with pytest.raises(ValueError):
        rng.categorical(np.array([0.5]), np.array([-0.1, 1.1]))
    with pytest.raises(ValueError):
        rng.categorical(np.array([0.5]), np.array([]))


def test_sample_bbm_matches_ensemble_counts():
    cfg = RunConfig(p=0.3, q=0.6, shots=200, seed=9)
    state = rng.RngState(cfg.seed, 0)
    tallies = dict.fromkeys(BELL_LABELS, 0)
    for _ in range(cfg.shots):
        label, state = sample_bbm(cfg.p, cfg.q, state)
        tallies[label] += 1
    assert tallies == run_ensemble(cfg).counts


def test_run_ensemble_bit_identical_reruns():
    cfg = RunConfig(p=0.1, q=0.75, shots=5000, seed=7)
    assert run_ensemble(cfg) == run_ensemble(cfg)


def test_run_ensemble_bookkeeping():
    cfg = RunConfig(p=0.1, q=0.75, shots=4000, seed=7)
    result = run_ensemble(cfg)
    assert sum(result.counts.values()) == cfg.shots
    assert abs(sum(result.empirical_freq.values()) - 1.0) < 1e-12
    assert result.analytic_prob == outcome_probabilities(cfg.p, cfg.q)
    assert set(result.post_reports) == set(BELL_LABELS)


def test_run_ensemble_reports_satisfy_the_pure_state_identities():
    result = run_ensemble(RunConfig(p=0.2, q=0.85, shots=100, seed=1))
    pre = result.pre_report
    assert abs(pre.vn_sum - 1.0) < 1e-10
    assert abs(pre.l_sum - 0.5) < 1e-10
    assert pre.c_re < 1e-12 and pre.c_hs < 1e-12
    for report in result.post_reports.values():
        assert abs(report.p_vn + report.s_vn - 1.0) < 1e-10
        assert report.c_re < 1e-12


def test_mean_post_svn_is_the_probability_weighted_entropy():
    p, q = 0.1, 0.75
    result = run_ensemble(RunConfig(p=p, q=q, shots=10, seed=2))
    s_phi, s_psi = post_entropies(p, q)
    probs = outcome_probabilities(p, q)
    expected = 2.0 * probs["phi+"] * s_phi + 2.0 * probs["psi+"] * s_psi
    assert abs(result.mean_post_svn - expected) < 1e-10
    recomputed = sum(
        result.analytic_prob[k] * result.post_reports[k].s_vn for k in BELL_LABELS
    )
    assert abs(result.mean_post_svn - recomputed) < 1e-12


def test_degenerate_branches_are_skipped():
    result = run_ensemble(RunConfig(p=1.0, q=0.0, shots=1000, seed=3))
    assert result.counts["phi+"] == 0 and result.counts["phi-"] == 0
    assert result.counts["psi+"] + result.counts["psi-"] == 1000
    assert set(result.post_reports) == {"psi+", "psi-"}
    assert result.mean_post_svn == 0.0


def test_three_sigma_band():
    assert abs(three_sigma(0.25, 10_000) - 3.0 * math.sqrt(0.25 * 0.75 / 10_000)) < 1e-15
    assert three_sigma(0.0, 100) == 0.0


def test_frequencies_within_three_sigma():
    for shots in (10_000, 100_000):
        result = run_ensemble(RunConfig(p=0.1, q=0.75, shots=shots, seed=7))
        errors = result.freq_error()
        for label, prob in result.analytic_prob.items():
            assert errors[label] <= three_sigma(prob, shots)


def test_error_shrinks_with_more_shots():
    small = run_ensemble(RunConfig(p=0.1, q=0.75, shots=10_000, seed=7))
    large = run_ensemble(RunConfig(p=0.1, q=0.75, shots=1_000_000, seed=7))
    assert max(large.freq_error().values()) < max(small.freq_error().values())


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_ensemble_deterministic_across_seeds(seed):
    cfg = RunConfig(p=0.4, q=0.55, shots=64, seed=seed)
    first = run_ensemble(cfg)
    assert isinstance(first, EnsembleResult)
    assert first == run_ensemble(cfg)


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(p=-0.1, q=0.5, shots=10, seed=0)
    with pytest.raises(ValueError):
        RunConfig(p=0.5, q=1.2, shots=10, seed=0)
    with pytest.raises(ValueError):
        RunConfig(p=0.5, q=0.5, shots=0, seed=0)


def test_run_config_masks_seed_to_64_bits():
    assert RunConfig(p=0.5, q=0.5, shots=1, seed=(1 << 64) + 5).seed == 5
    assert RunConfig(p=0.5, q=0.5, shots=1, seed=-1).seed == (1 << 64) - 1

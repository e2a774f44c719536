"""Seeded Monte Carlo ensembles of the swapping protocol."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import measures, rng, swap
from .linalg import DensityMatrix
from .measures import MeasureReport
from .states import BELL_LABELS, require_weight


@dataclass(frozen=True)
class RunConfig:
    """One ensemble: source weights, number of shots, stream seed."""

    p: float
    q: float
    shots: int
    seed: int

    def __post_init__(self) -> None:
        require_weight(self.p, "p")
        require_weight(self.q, "q")
        if int(self.shots) < 1:
            raise ValueError(f"shots must be >= 1, got {self.shots}")
        object.__setattr__(self, "shots", int(self.shots))
        object.__setattr__(self, "seed", int(self.seed) & rng.MASK64)


@dataclass(frozen=True)
class EnsembleResult:
    """Counts and frequencies per label next to the analytic expectations."""

    counts: dict[str, int]
    empirical_freq: dict[str, float]
    analytic_prob: dict[str, float]
    mean_post_svn: float
    pre_report: MeasureReport
    post_reports: dict[str, MeasureReport]

    def freq_error(self) -> dict[str, float]:
        """Per-label |empirical - analytic|."""
        return {k: abs(self.empirical_freq[k] - self.analytic_prob[k]) for k in self.counts}


def three_sigma(prob: float, shots: int) -> float:
    """Normal-approximation 3-sigma band for a binomial frequency."""
    return 3.0 * math.sqrt(prob * (1.0 - prob) / shots)


def sample_bbm(p: float, q: float, state: rng.RngState) -> tuple[str, rng.RngState]:
    """Draw one Bell label; returns the label and the advanced stream state."""
    probs = np.array(list(swap.outcome_probabilities(p, q).values()))
    u, nxt = state.draw()
    idx = int(rng.categorical(np.array([u]), probs)[0])
    return BELL_LABELS[idx], nxt


def run_ensemble(cfg: RunConfig) -> EnsembleResult:
    """cfg.shots draws from counter 0 of the seed's stream, plus the analytic bookkeeping.

    The label sequence is exactly what repeated sample_bbm calls starting
    from RngState(seed, 0) would produce, so identical configs give
    identical results bit for bit.
    """
    probs = swap.outcome_probabilities(cfg.p, cfg.q)
    prob_vec = np.array([probs[label] for label in BELL_LABELS])
    draws = rng.uniforms(cfg.seed, 0, cfg.shots)
    picked = rng.categorical(draws, prob_vec)
    tally = np.bincount(picked, minlength=len(BELL_LABELS))
    counts = {label: int(c) for label, c in zip(BELL_LABELS, tally)}
    empirical = {label: counts[label] / cfg.shots for label in BELL_LABELS}

    outcomes = swap.bbm_outcomes(cfg.p, cfg.q)
    pre_state = DensityMatrix(np.diag([cfg.p, 1.0 - cfg.p]).astype(complex), (2,))
    post_reports = {
        o.label: measures.report(o.post_state.reduced({0}))
        for o in outcomes
        if o.post_state is not None
    }
    mean_post_svn = sum(
        o.probability * post_reports[o.label].s_vn
        for o in outcomes
        if o.post_state is not None
    )
    return EnsembleResult(
        counts=counts,
        empirical_freq=empirical,
        analytic_prob=probs,
        mean_post_svn=mean_post_svn,
        pre_report=measures.report(pre_state),
        post_reports=post_reports,
    )

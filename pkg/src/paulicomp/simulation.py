"""Monte Carlo sequential spin measurements, alpha first and beta second.

The initial state is maximally mixed (the normalized trace), and the first
measurement collapses onto its eigenprojector. Random numbers come from
numpy's PCG64 generator; partitioned runs use ``SeedSequence.spawn`` so a
fixed ``(seed, partitions)`` always gives the same histogram.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .algebra import BlochDirection, InputError
from .complementarity import pair_trace
from .spectral import SpectralSubset, induced_probability

OUTCOMES = (1, -1)


@dataclass(frozen=True)
class JointHistogram:
    """Counts ``n(a, b)`` of first outcome ``a`` and second outcome ``b``."""

    counts: dict
    shots: int

    def __post_init__(self):
        assert sum(self.counts.values()) == self.shots

    def __getitem__(self, key) -> int:
        return self.counts[key]

    @classmethod
    def from_counts(cls, pp: int, pm: int, mp: int, mm: int) -> "JointHistogram":
        counts = {(1, 1): pp, (1, -1): pm, (-1, 1): mp, (-1, -1): mm}
        if any(c < 0 for c in counts.values()):
            raise InputError("counts must be non-negative")
        return cls(counts, pp + pm + mp + mm)


@dataclass(frozen=True)
class ConditionalTable:
    conditionals: dict  # (a, b) -> p(b | a)
    marginals: dict  # a -> p(a)

    def __getitem__(self, key) -> float:
        return self.conditionals[key]


def first_outcome_distribution(alpha: BlochDirection) -> tuple[float, float]:
    """``(p(+1), p(-1))`` for measuring alpha in the maximally mixed state."""
    return (induced_probability(alpha, SpectralSubset.of(1)),
            induced_probability(alpha, SpectralSubset.of(-1)))


def _outcome(x: int) -> int:
    if x not in OUTCOMES:
        raise InputError(f"outcome must be +1 or -1, got {x!r}")
    return x


def conditional_probability(alpha: BlochDirection, a: int, beta: BlochDirection, b: int) -> float:
    """p(beta gives b | alpha gave a) = tr(E_a F_b) / tr(E_a) = (1 + ab<alpha,beta>) / 2."""
    s1 = SpectralSubset.of(_outcome(a))
    s2 = SpectralSubset.of(_outcome(b))
    return pair_trace(alpha, beta, s1, s2) / induced_probability(alpha, s1)


def exact_conditionals(alpha: BlochDirection, beta: BlochDirection) -> ConditionalTable:
    p_plus, p_minus = first_outcome_distribution(alpha)
    cond = {(a, b): conditional_probability(alpha, a, beta, b) for a in OUTCOMES for b in OUTCOMES}
    return ConditionalTable(cond, {1: p_plus, -1: p_minus})


def _sample(rng: np.random.Generator, shots: int, p_first_plus: float,
            p_second_plus: dict) -> np.ndarray:
    a_plus = rng.random(shots) < p_first_plus
    thresholds = np.where(a_plus, p_second_plus[1], p_second_plus[-1])
    b_plus = rng.random(shots) < thresholds
    return np.array([
        np.count_nonzero(a_plus & b_plus),
        np.count_nonzero(a_plus & ~b_plus),
        np.count_nonzero(~a_plus & b_plus),
        np.count_nonzero(~a_plus & ~b_plus),
    ], dtype=np.int64)


def simulate(alpha: BlochDirection, beta: BlochDirection, shots: int, seed: int,
             partitions: int = 1, workers: int | None = None) -> JointHistogram:
    """Sample ``shots`` sequential (alpha, beta) measurements.

    ``partitions == 1`` draws from ``default_rng(seed)`` and is the
    reproducibility reference. Larger values split the shots into
    near-equal chunks, each with a child stream of ``SeedSequence(seed)``.
    """
    if shots < 1:
        raise InputError(f"shots must be >= 1, got {shots!r}")
    if partitions < 1:
        raise InputError(f"partitions must be >= 1, got {partitions!r}")
    p_first = first_outcome_distribution(alpha)[0]
    p_second = {a: conditional_probability(alpha, a, beta, 1) for a in OUTCOMES}

    if partitions == 1:
        totals = _sample(np.random.default_rng(seed), shots, p_first, p_second)
    else:
        children = np.random.SeedSequence(seed).spawn(partitions)
        sizes = [shots // partitions + (k < shots % partitions) for k in range(partitions)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(
                lambda job: _sample(np.random.default_rng(job[0]), job[1], p_first, p_second),
                zip(children, sizes)))
        totals = np.sum(parts, axis=0)
    return JointHistogram.from_counts(*(int(c) for c in totals))


def empirical_conditionals(h: JointHistogram) -> ConditionalTable:
    """Estimate p(b | a) as n(a, b) / n(a)."""
    cond = {}
    marg = {}
    for a in OUTCOMES:
        row = h[(a, 1)] + h[(a, -1)]
        if row == 0:
            raise InputError(f"no shots with first outcome {a:+d}; rerun with more shots")
        for b in OUTCOMES:
            cond[(a, b)] = h[(a, b)] / row
        marg[a] = row / h.shots
    return ConditionalTable(cond, marg)

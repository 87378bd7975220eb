"""Accardi complementarity of Pauli observables in unit directions.

A pair is complementary when tr(E_A(S1) E_B(S2)) = mu_B(S1) mu_B(S2) for
every pair of spectral subsets; for unit directions that happens exactly
when the directions are orthogonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .algebra import IDENTITY, ZERO, BlochDirection, InputError
from .spectral import ALL_SUBSETS, SpectralSubset, bernoulli_measure, evaluate, pvm

DEFAULT_TOL = 1e-9
_IMAG_TOL = 1e-12
_MIN_SAMPLE_NORM = 1e-6


def _check_tol(tol: float) -> None:
    if not tol > 0:
        raise InputError(f"tolerance must be positive, got {tol!r}")


@dataclass(frozen=True)
class SubsetPairTrace:
    s1: SpectralSubset
    s2: SpectralSubset
    trace_value: float
    target: float
    deviation: float


@dataclass(frozen=True)
class ComplementarityReport:
    alpha: BlochDirection
    beta: BlochDirection
    entries: tuple[SubsetPairTrace, ...]
    inner_product: float
    max_deviation: float
    tol: float
    verdict: bool

    def failures(self) -> list[SubsetPairTrace]:
        return [e for e in self.entries if e.deviation > self.tol]


@dataclass(frozen=True)
class SetReport:
    directions: tuple[BlochDirection, ...]
    pairs: tuple[tuple[int, int], ...]
    pair_reports: tuple[ComplementarityReport, ...]
    verdict: bool
    first_failure: int | None

    @property
    def max_deviation(self) -> float:
        return max(r.max_deviation for r in self.pair_reports)


def _subset_stack(dir: BlochDirection) -> np.ndarray:
    # same order as ALL_SUBSETS: empty, {-1}, {+1}, full
    m = pvm(dir)
    return np.stack([ZERO, m.e_minus, m.e_plus, IDENTITY])


def _trace_table(alpha: BlochDirection, beta: BlochDirection) -> np.ndarray:
    # t[i, j] = tr(E_alpha(S_i) E_beta(S_j)) over ALL_SUBSETS, normalized trace
    t = np.einsum("iab,jba->ij", _subset_stack(alpha), _subset_stack(beta)) / 2
    assert np.max(np.abs(t.imag)) <= _IMAG_TOL
    return np.clip(t.real, 0.0, 1.0)


def pair_trace(alpha: BlochDirection, beta: BlochDirection,
               s1: SpectralSubset, s2: SpectralSubset) -> float:
    """Normalized trace of E_alpha(S1) E_beta(S2)."""
    prod = evaluate(pvm(alpha), s1) @ evaluate(pvm(beta), s2)
    t = (prod[0, 0] + prod[1, 1]) / 2
    assert abs(t.imag) <= _IMAG_TOL
    return float(np.clip(t.real, 0.0, 1.0))


_TARGETS = np.array([[bernoulli_measure(a) * bernoulli_measure(b) for b in ALL_SUBSETS]
                     for a in ALL_SUBSETS])


def check_pair_exhaustive(alpha: BlochDirection, beta: BlochDirection,
                          tol: float = DEFAULT_TOL) -> ComplementarityReport:
    """Test the defining identity on all 16 pairs of spectral subsets."""
    _check_tol(tol)
    table = _trace_table(alpha, beta)
    dev = np.abs(table - _TARGETS)
    entries = tuple(
        SubsetPairTrace(s1, s2, float(table[i, j]), float(_TARGETS[i, j]), float(dev[i, j]))
        for i, s1 in enumerate(ALL_SUBSETS)
        for j, s2 in enumerate(ALL_SUBSETS)
    )
    max_dev = float(dev.max())
    return ComplementarityReport(alpha, beta, entries, alpha.dot(beta), max_dev, tol, max_dev <= tol)


def check_pair_fast(alpha: BlochDirection, beta: BlochDirection, tol: float = DEFAULT_TOL) -> bool:
    """Orthogonality criterion.

    The singleton deviations are |<alpha, beta>| / 4, so the threshold on the
    inner product is 4 * tol to agree with :func:`check_pair_exhaustive`.
    """
    _check_tol(tol)
    return abs(alpha.dot(beta)) <= 4 * tol


def check_set(dirs, tol: float = DEFAULT_TOL) -> SetReport:
    """A set is complementary iff every 2-element subset is."""
    _check_tol(tol)
    dirs = tuple(dirs)
    if len(dirs) < 2:
        raise InputError(f"need at least 2 directions, got {len(dirs)}")
    pairs = tuple(combinations(range(len(dirs)), 2))
    reports = tuple(check_pair_exhaustive(dirs[i], dirs[j], tol) for i, j in pairs)
    first = next((k for k, r in enumerate(reports) if not r.verdict), None)
    return SetReport(dirs, pairs, reports, first is None, first)


def random_direction(rng: np.random.Generator) -> BlochDirection:
    """Uniform point of S^2 from three normalized standard normals."""
    while True:
        v = rng.standard_normal(3)
        n = np.linalg.norm(v)
        if n >= _MIN_SAMPLE_NORM:
            return BlochDirection(tuple(float(c) for c in v / n))


def _gram_schmidt(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    w = v - (v @ u) * u
    return w / np.linalg.norm(w)


def orthonormal_triple(first: BlochDirection | None = None, seed: int = 0):
    """Complete ``first`` (random when absent) to an orthonormal basis of R^3.

    The second vector comes from Gram-Schmidt against a seeded random
    direction; the third is the cross product, which makes the basis
    right-handed.
    """
    rng = np.random.default_rng(seed)
    if first is None:
        first = random_direction(rng)
    u = first.vector
    while True:
        v = random_direction(rng).vector
        # reject near-parallel helpers so the projection keeps precision
        if abs(u @ v) < 0.9:
            break
    w2 = _gram_schmidt(u, v)
    w3 = np.cross(u, w2)
    w3 = w3 / np.linalg.norm(w3)
    return first, BlochDirection(tuple(map(float, w2))), BlochDirection(tuple(map(float, w3)))


def gram_residual(dirs) -> float:
    v = np.array([d.components for d in dirs])
    return float(np.max(np.abs(v @ v.T - np.eye(len(v)))))


@dataclass(frozen=True)
class FourSetEvidence:
    trials: int
    complementary_found: int
    # smallest singular value of each 4x4 Gram matrix; extremes over trials
    min_gram_singular: float
    max_gram_singular: float
    gram_certified: bool


def no_four_set_evidence(trials: int, seed: int = 0, tol: float = DEFAULT_TOL) -> FourSetEvidence:
    """Sampling evidence that no four unit directions are pairwise complementary.

    Besides checking each random 4-set, every Gram matrix V V^T (V the 4x3
    matrix of directions) is confirmed singular: its smallest singular
    value is at most 3 * tol, so it can never be within tol of the
    identity that a complementary 4-set would require.
    """
    if trials < 1:
        raise InputError(f"trials must be >= 1, got {trials!r}")
    _check_tol(tol)
    rng = np.random.default_rng(seed)
    found = 0
    smallest = []
    for _ in range(trials):
        dirs = [random_direction(rng) for _ in range(4)]
        if check_set(dirs, tol).verdict:
            found += 1
        v = np.array([d.components for d in dirs])
        smallest.append(np.linalg.svd(v @ v.T, compute_uv=False)[-1])
    smallest = np.array(smallest)
    return FourSetEvidence(trials, found, float(smallest.min()), float(smallest.max()),
                           bool(smallest.max() <= 3 * tol))

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paulicomp import (
    E1,
    E2,
    E3,
    EMPTY,
    FULL,
    MINUS,
    PLUS,
    BlochDirection,
    InputError,
    bernoulli_measure,
    check_pair_exhaustive,
    check_pair_fast,
    check_set,
    induced_probability,
    no_four_set_evidence,
    orthonormal_triple,
    pair_trace,
    random_direction,
)
from paulicomp.complementarity import gram_residual
from paulicomp.spectral import ALL_SUBSETS

from conftest import eigh_projectors, random_unit, unit_vec3


def oracle_trace(alpha, beta, s1, s2):
    """Brute force from LAPACK projectors and the full matrix trace."""
    def e(d, s):
        p = eigh_projectors(d.matrix())
        return sum((p[k] for k in s.points), np.zeros((2, 2), dtype=complex))
    return (np.trace(e(alpha, s1) @ e(beta, s2)) / 2).real


def with_inner_product(alpha, c, rng):
    """A unit direction whose inner product with alpha is c."""
    w = orthonormal_triple(alpha, int(rng.integers(1 << 31)))[1].vector
    return BlochDirection.from_vector(c * alpha.vector + math.sqrt(1 - c * c) * w)


class TestPairTrace:
    def test_orthogonal_singleton(self):
        assert pair_trace(E1, E3, PLUS, PLUS) == pytest.approx(0.25, abs=1e-15)

    def test_empty(self, rng):
        a, b = random_unit(rng, 2)
        assert pair_trace(a, b, EMPTY, PLUS) == 0

    def test_self(self, rng):
        (a,) = random_unit(rng, 1)
        assert pair_trace(a, a, PLUS, PLUS) == pytest.approx(0.5, abs=1e-15)

    def test_against_brute_force(self, rng):
        dirs = random_unit(rng, 100)
        for a, b in zip(dirs[::2], dirs[1::2]):
            for s1 in ALL_SUBSETS:
                for s2 in ALL_SUBSETS:
                    assert abs(pair_trace(a, b, s1, s2) - oracle_trace(a, b, s1, s2)) <= 1e-12


@settings(max_examples=300)
@given(unit_vec3, unit_vec3)
def test_singleton_trace_formulas(a, b):
    ip = a.dot(b)
    assert abs(pair_trace(a, b, PLUS, PLUS) - (1 + ip) / 4) <= 1e-12
    assert abs(pair_trace(a, b, MINUS, MINUS) - (1 + ip) / 4) <= 1e-12
    assert abs(pair_trace(a, b, PLUS, MINUS) - (1 - ip) / 4) <= 1e-12
    assert abs(pair_trace(a, b, MINUS, PLUS) - (1 - ip) / 4) <= 1e-12


@settings(max_examples=200)
@given(unit_vec3, unit_vec3)
def test_marginal_cases(a, b):
    for s in ALL_SUBSETS:
        assert pair_trace(a, b, EMPTY, s) == 0
        assert pair_trace(a, b, s, EMPTY) == 0
        assert abs(pair_trace(a, b, FULL, s) - induced_probability(b, s)) <= 1e-12
        assert abs(pair_trace(a, b, s, FULL) - induced_probability(a, s)) <= 1e-12


class TestExhaustive:
    def test_pauli_pair(self):
        r = check_pair_exhaustive(E1, E2, 1e-9)
        assert r.verdict
        assert len(r.entries) == 16
        assert r.max_deviation == 0

    def test_self_pair_fails_at_plus_plus(self, rng):
        (a,) = random_unit(rng, 1)
        r = check_pair_exhaustive(a, a, 1e-9)
        assert not r.verdict
        pp = next(e for e in r.entries if e.s1 == PLUS and e.s2 == PLUS)
        assert pp.trace_value == pytest.approx(0.5, abs=1e-12)
        assert pp.target == 0.25
        assert pp in r.failures()

    @pytest.mark.parametrize("theta", np.linspace(0, np.pi, 13))
    def test_max_deviation_along_circle(self, theta):
        b = BlochDirection.from_vector((np.cos(theta), np.sin(theta), 0))
        r = check_pair_exhaustive(E1, b, 1e-9)
        assert abs(r.max_deviation - abs(np.cos(theta)) / 4) <= 1e-12
        oracle = max(abs(oracle_trace(E1, b, s1, s2) - bernoulli_measure(s1) * bernoulli_measure(s2))
                     for s1 in ALL_SUBSETS for s2 in ALL_SUBSETS)
        assert abs(r.max_deviation - oracle) <= 1e-12

    def test_entry_invariants(self, rng):
        a, b = random_unit(rng, 2)
        r = check_pair_exhaustive(a, b, 1e-9)
        assert r.max_deviation == max(e.deviation for e in r.entries)
        for e in r.entries:
            assert e.deviation == abs(e.trace_value - e.target)
            assert 0 <= e.trace_value <= 1
            assert e.target == bernoulli_measure(e.s1) * bernoulli_measure(e.s2)
        assert {(e.s1, e.s2) for e in r.entries} == {(x, y) for x in ALL_SUBSETS for y in ALL_SUBSETS}

    @pytest.mark.parametrize("tol", [0.0, -1e-9])
    def test_bad_tol(self, tol):
        with pytest.raises(InputError):
            check_pair_exhaustive(E1, E2, tol)
        with pytest.raises(InputError):
            check_pair_fast(E1, E2, tol)


class TestFast:
    def test_examples(self, rng):
        assert check_pair_fast(E2, E3, 1e-9)
        (a,) = random_unit(rng, 1)
        assert not check_pair_fast(a, -a, 1e-9)
        assert not check_pair_exhaustive(a, -a, 1e-9).verdict

    @pytest.mark.parametrize("factor", [0.5, 0.99, 1.01, 2.0])
    @pytest.mark.parametrize("tol", [1e-9, 1e-6, 1e-3])
    def test_agrees_near_boundary(self, rng, factor, tol):
        for a in random_unit(rng, 20):
            for sign in (1, -1):
                b = with_inner_product(a, sign * factor * 4 * tol, rng)
                fast = check_pair_fast(a, b, tol)
                assert fast == (factor < 1)
                assert check_pair_exhaustive(a, b, tol).verdict == fast


@settings(max_examples=300)
@given(unit_vec3, unit_vec3, st.sampled_from([1e-9, 1e-4, 0.05]))
def test_verdict_equivalence_and_symmetry(a, b, tol):
    ex = check_pair_exhaustive(a, b, tol).verdict
    assert ex == check_pair_fast(a, b, tol)
    assert ex == check_pair_exhaustive(b, a, tol).verdict


class TestSet:
    def test_pauli_triple(self):
        r = check_set([E1, E2, E3], 1e-9)
        assert r.verdict and r.first_failure is None
        assert r.pairs == ((0, 1), (0, 2), (1, 2))
        assert r.max_deviation <= 1e-12

    def test_fourth_vector_breaks_it(self):
        d = BlochDirection.from_vector((1, 1, 1), normalize=True)
        r = check_set([E1, E2, E3, d], 1e-9)
        assert not r.verdict
        assert r.pairs[r.first_failure] == (0, 3)

    def test_repeated_direction(self):
        r = check_set([E1, E1], 1e-9)
        assert not r.verdict and r.first_failure == 0

    def test_first_failure_is_lexicographic(self):
        r = check_set([E1, E2, E2, E3], 1e-9)
        assert r.pairs[r.first_failure] == (1, 2)

    def test_too_few(self):
        with pytest.raises(InputError):
            check_set([E1], 1e-9)

    def test_binary_type(self, rng):
        dirs = random_unit(rng, 5) + [E1, E2]
        r = check_set(dirs, 0.1)
        assert r.verdict == all(p.verdict for p in r.pair_reports)
        assert len(r.pair_reports) == math.comb(len(dirs), 2)


class TestTriple:
    def test_given_first(self):
        t = orthonormal_triple(E3, 5)
        assert t[0] == E3
        assert gram_residual(t) <= 1e-12

    @pytest.mark.parametrize("seed", range(20))
    def test_random_triple_is_complementary(self, seed):
        t = orthonormal_triple(None, seed)
        assert gram_residual(t) <= 1e-12
        assert check_set(t, 1e-9).verdict

    def test_deterministic(self):
        assert orthonormal_triple(E1, 11) == orthonormal_triple(E1, 11)
        assert orthonormal_triple(None, 11) == orthonormal_triple(None, 11)
        assert orthonormal_triple(None, 11) != orthonormal_triple(None, 12)


class TestRandomDirection:
    def test_uniform_mean_and_norm(self):
        rng = np.random.default_rng(99)
        v = np.array([random_direction(rng).components for _ in range(100_000)])
        assert np.all(np.abs(v.mean(axis=0)) <= 0.02)
        assert np.all(np.abs(np.linalg.norm(v, axis=1) - 1) <= 1e-12)
        # uniform on S^2 means each coordinate is uniform on [-1, 1]: E[x^2] = 1/3
        assert np.all(np.abs((v ** 2).mean(axis=0) - 1 / 3) <= 0.01)

    def test_reproducible(self):
        a = [random_direction(np.random.default_rng(3)) for _ in range(1)]
        b = [random_direction(np.random.default_rng(3)) for _ in range(1)]
        assert a == b


class TestFourSets:
    def test_evidence(self):
        ev = no_four_set_evidence(300, seed=1, tol=1e-9)
        assert ev.trials == 300
        assert ev.complementary_found == 0
        assert ev.gram_certified
        assert ev.max_gram_singular <= 3e-9

    def test_rejects_zero_trials(self):
        with pytest.raises(InputError):
            no_four_set_evidence(0)

    def test_pigeonhole_against_standard_triple(self, rng):
        for d in random_unit(rng, 2000):
            best = max(abs(d.dot(e)) for e in (E1, E2, E3))
            assert best >= 1 / math.sqrt(3) - 1e-12
            assert not check_set([E1, E2, E3, d], 1e-9).verdict
        # the bound is attained on the diagonal
        diag = BlochDirection.from_vector((1, 1, 1), normalize=True)
        assert max(abs(diag.dot(e)) for e in (E1, E2, E3)) == pytest.approx(1 / math.sqrt(3), abs=1e-15)

"""Eigenvectors, spectral projections and the projection-valued measure of
the Pauli matrix in a unit direction."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    IDENTITY,
    ZERO,
    BlochDirection,
    InputError,
    adjoint,
    max_abs,
    normalized_trace,
    sigma_map,
)

PROJECTOR_TOL = 1e-12
NORM_TOL = 1e-9

SPECTRUM = (-1, 1)


@dataclass(frozen=True)
class SpectralSubset:
    """A Borel subset of R, recorded only by which eigenvalues it contains."""

    contains_minus: bool
    contains_plus: bool

    @classmethod
    def of(cls, *points: int) -> "SpectralSubset":
        for p in points:
            if p not in SPECTRUM:
                raise InputError(f"spectral point must be -1 or +1, got {p!r}")
        return cls(-1 in points, 1 in points)

    @property
    def points(self) -> tuple[int, ...]:
        return tuple(p for p, inside in zip(SPECTRUM, (self.contains_minus, self.contains_plus)) if inside)

    def isdisjoint(self, other: "SpectralSubset") -> bool:
        return not set(self.points) & set(other.points)

    def __or__(self, other: "SpectralSubset") -> "SpectralSubset":
        return SpectralSubset(self.contains_minus or other.contains_minus,
                              self.contains_plus or other.contains_plus)

    def label(self) -> str:
        return "{" + ",".join("-1" if p < 0 else "+1" for p in self.points) + "}"

    def __str__(self) -> str:
        return self.label()


EMPTY = SpectralSubset(False, False)
MINUS = SpectralSubset(True, False)
PLUS = SpectralSubset(False, True)
FULL = SpectralSubset(True, True)
ALL_SUBSETS = (EMPTY, MINUS, PLUS, FULL)


def _check_projector(m: np.ndarray, tol: float = PROJECTOR_TOL) -> None:
    assert max_abs(m - adjoint(m)) <= tol, "projector is not Hermitian"
    assert max_abs(m @ m - m) <= tol, "projector is not idempotent"


@dataclass(frozen=True, eq=False)
class SpectralMeasure:
    direction: BlochDirection
    e_plus: np.ndarray
    e_minus: np.ndarray

    def __post_init__(self):
        for m in (self.e_plus, self.e_minus):
            _check_projector(m)
            m.setflags(write=False)

    def __call__(self, s: SpectralSubset) -> np.ndarray:
        return evaluate(self, s)


def _sign(sign: int) -> int:
    if sign not in SPECTRUM:
        raise InputError(f"sign must be +1 or -1, got {sign!r}")
    return sign


def eigenvector(dir: BlochDirection, sign: int) -> np.ndarray:
    """Normalized eigenvector of alpha . sigma for eigenvalue ``sign``.

    Each closed form has a removable singularity at one pole, so the branch
    is chosen by the hemisphere of alpha_3. Defined up to a global phase.
    """
    a1, a2, a3 = dir.components
    _sign(sign)
    if sign == 1:
        if a3 >= 0:
            v = np.array([1 + a3, a1 + 1j * a2]) / np.sqrt(2 * (1 + a3))
        else:
            v = np.array([a1 - 1j * a2, 1 - a3]) / np.sqrt(2 * (1 - a3))
    else:
        if a3 <= 0:
            v = np.array([-1 + a3, a1 + 1j * a2]) / np.sqrt(2 * (1 - a3))
        else:
            v = np.array([a1 - 1j * a2, -(1 + a3)]) / np.sqrt(2 * (1 + a3))
    return v.astype(complex)


def outer_projector(psi) -> np.ndarray:
    """Rank-one projector |psi><psi| onto a unit vector of C^2."""
    v = np.asarray(psi, dtype=complex)
    if v.shape != (2,):
        raise InputError(f"expected a vector of C^2, got shape {v.shape}")
    if abs(np.linalg.norm(v) - 1) > NORM_TOL:
        raise InputError("vector must be normalized")
    p = np.outer(v, v.conj())
    _check_projector(p)
    return p


def pvm(dir: BlochDirection) -> SpectralMeasure:
    """Closed form E({+1}) = (I + a.s)/2, E({-1}) = (I - a.s)/2."""
    a = sigma_map(dir.components)
    return SpectralMeasure(dir, (IDENTITY + a) / 2, (IDENTITY - a) / 2)


def lagrange_projector(dir: BlochDirection, sign: int) -> np.ndarray:
    """Indicator of {sign} applied to alpha . sigma via Lagrange interpolation.

    On a two-point spectrum any function of the matrix equals the
    degree-one polynomial agreeing with it on the nodes.
    """
    _sign(sign)
    a = sigma_map(dir.components)
    result = np.zeros((2, 2), dtype=complex)
    for node in SPECTRUM:
        value = 1.0 if node == sign else 0.0
        if value == 0.0:
            continue
        basis = IDENTITY.copy()
        for other in SPECTRUM:
            if other != node:
                basis = basis @ (a - other * IDENTITY) / (node - other)
        result = result + value * basis
    _check_projector(result)
    return result


def evaluate(measure: SpectralMeasure, s: SpectralSubset) -> np.ndarray:
    if s.contains_plus and s.contains_minus:
        return IDENTITY.copy()
    if s.contains_plus:
        return measure.e_plus.copy()
    if s.contains_minus:
        return measure.e_minus.copy()
    return ZERO.copy()


def bernoulli_measure(s: SpectralSubset) -> float:
    """Symmetric Bernoulli measure: mass 1/2 on each of -1 and +1."""
    return 0.5 * s.contains_minus + 0.5 * s.contains_plus


def induced_probability(dir: BlochDirection, s: SpectralSubset) -> float:
    """Normalized trace of E(S); equals the Bernoulli measure of S."""
    t = normalized_trace(evaluate(pvm(dir), s))
    assert abs(t.imag) <= PROJECTOR_TOL
    return t.real

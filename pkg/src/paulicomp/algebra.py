"""2x2 complex matrix algebra, Pauli matrices and the map R^3 -> su(2).

Matrices are plain ``numpy`` arrays of shape ``(2, 2)`` and dtype
``complex128``; vectors of R^3 are float arrays of shape ``(3,)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

UNIT_TOL = 1e-9
SU2_TOL = 1e-9

IDENTITY = np.eye(2, dtype=complex)
ZERO = np.zeros((2, 2), dtype=complex)

_PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
for _m in _PAULI:
    _m.setflags(write=False)
IDENTITY.setflags(write=False)
ZERO.setflags(write=False)


class InputError(ValueError):
    """Raised when a caller passes data outside an operation's domain."""


def as_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=complex)
    if m.shape != (2, 2):
        raise InputError(f"expected a 2x2 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InputError("matrix entries must be finite")
    return m


def as_vec3(v) -> np.ndarray:
    x = np.asarray(v, dtype=float)
    if x.shape != (3,):
        raise InputError(f"expected 3 components, got shape {x.shape}")
    if not np.all(np.isfinite(x)):
        raise InputError("vector components must be finite")
    return x


def pauli(k: int) -> np.ndarray:
    """Return the Pauli matrix sigma_k for k in {1, 2, 3}."""
    if k not in (1, 2, 3):
        raise InputError(f"Pauli index must be 1, 2 or 3, got {k!r}")
    return _PAULI[k - 1].copy()


def sigma_map(v) -> np.ndarray:
    """alpha . sigma = a1 s1 + a2 s2 + a3 s3, written out entrywise."""
    a1, a2, a3 = as_vec3(v)
    return np.array([[a3, a1 - 1j * a2], [a1 + 1j * a2, -a3]], dtype=complex)


def adjoint(a) -> np.ndarray:
    return np.asarray(a, dtype=complex).conj().T


def matmul(a, b) -> np.ndarray:
    return np.asarray(a, dtype=complex) @ np.asarray(b, dtype=complex)


def add(a, b) -> np.ndarray:
    return np.asarray(a, dtype=complex) + np.asarray(b, dtype=complex)


def scale(c, a) -> np.ndarray:
    return complex(c) * np.asarray(a, dtype=complex)


def normalized_trace(a) -> complex:
    """tr A = (a + d) / 2, so that tr I = 1."""
    m = np.asarray(a, dtype=complex)
    return complex((m[0, 0] + m[1, 1]) / 2)


def hs_inner(a, b) -> complex:
    """Normalized Hilbert-Schmidt inner product tr(A* B).

    Conjugate-linear in the first slot, linear in the second.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    # tr(A* B) / 2 = sum_ij conj(A_ij) B_ij / 2
    return complex(np.vdot(a, b) / 2)


def max_abs(a) -> float:
    """Max-absolute-entry norm, the comparison norm used throughout."""
    return float(np.max(np.abs(a)))


def is_su2(a, tol: float = SU2_TOL) -> bool:
    if not tol > 0:
        raise InputError(f"tolerance must be positive, got {tol!r}")
    m = np.asarray(a, dtype=complex)
    return max_abs(m - adjoint(m)) <= tol and abs(normalized_trace(m)) <= tol


def inverse_sigma_map(a, tol: float = SU2_TOL) -> np.ndarray:
    """Recover v with sigma_map(v) == A for A in su(2).

    Components are the inner products of A against the orthonormal basis
    sigma_1, sigma_2, sigma_3.
    """
    m = as_matrix(a)
    if max_abs(m - adjoint(m)) > tol:
        raise InputError("matrix is not Hermitian")
    if abs(normalized_trace(m)) > tol:
        raise InputError("matrix is not traceless")
    return np.array([hs_inner(p, m).real for p in _PAULI])


@dataclass(frozen=True)
class BlochDirection:
    """A unit vector of R^3, i.e. a point of the Bloch sphere S^2.

    Build through :meth:`from_vector`; the stored components are always
    renormalized so downstream identities hold to round-off.
    """

    components: tuple[float, float, float]

    @classmethod
    def from_vector(cls, v, normalize: bool = False, tol: float = UNIT_TOL) -> "BlochDirection":
        """Strict mode rejects ``| |v|^2 - 1 | > tol``; ``normalize=True`` only rejects zero."""
        x = as_vec3(v)
        sq = float(x @ x)
        if normalize:
            if sq == 0.0:
                raise InputError("cannot normalize the zero vector")
        elif abs(sq - 1.0) > tol:
            raise InputError(f"vector is not a unit vector (|v|^2 = {sq!r})")
        x = x / np.sqrt(sq)
        return cls(tuple(float(c) for c in x))

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.components)

    def matrix(self) -> np.ndarray:
        return sigma_map(self.components)

    def __neg__(self) -> "BlochDirection":
        return BlochDirection(tuple(-c for c in self.components))

    def dot(self, other: "BlochDirection") -> float:
        return float(np.dot(self.components, other.components))


def direction(v, normalize: bool = False) -> BlochDirection:
    """Shorthand for :meth:`BlochDirection.from_vector`."""
    if isinstance(v, BlochDirection):
        return v
    return BlochDirection.from_vector(v, normalize=normalize)


E1 = BlochDirection((1.0, 0.0, 0.0))
E2 = BlochDirection((0.0, 1.0, 0.0))
E3 = BlochDirection((0.0, 0.0, 1.0))

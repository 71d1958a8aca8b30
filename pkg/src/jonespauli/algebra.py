"""Small dense complex matrices (2x2 and 3x3) and the operator algebra on them.

Everything here is immutable: a :class:`CMatrix` wraps a read-only numpy
array, and every operation returns a new matrix.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

DEFAULT_TOL = 1e-9
SUPPORTED_DIMS = (2, 3)


class DimensionError(ValueError):
    """Operands have incompatible or unsupported dimensions."""


class CMatrix:
    """Immutable square complex matrix of dimension 2 (quartic) or 3 (nonic)."""

    __slots__ = ("_a",)

    def __init__(self, entries: Sequence[Sequence[complex]] | np.ndarray):
        a = np.array(entries, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] not in SUPPORTED_DIMS:
            raise DimensionError(f"expected a 2x2 or 3x3 matrix, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise ValueError("matrix entries must be finite")
        a.setflags(write=False)
        self._a = a

    @classmethod
    def identity(cls, dim: int = 2) -> CMatrix:
        return cls(np.eye(dim))

    @classmethod
    def zeros(cls, dim: int = 2) -> CMatrix:
        return cls(np.zeros((dim, dim)))

    @property
    def dim(self) -> int:
        return self._a.shape[0]

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the entries."""
        return self._a

    def __getitem__(self, idx):
        return complex(self._a[idx])

    def rows(self) -> list[list[complex]]:
        return [[complex(z) for z in row] for row in self._a]

    def dagger(self) -> CMatrix:
        return CMatrix(self._a.conj().T)

    def transpose(self) -> CMatrix:
        return CMatrix(self._a.T)

    def trace(self) -> complex:
        return complex(np.trace(self._a))

    def det(self) -> complex:
        if self.dim == 2:
            a = self._a
            return complex(a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0])
        return complex(np.linalg.det(self._a))

    def max_abs(self) -> float:
        return float(np.max(np.abs(self._a)))

    def is_zero(self, tol: float = DEFAULT_TOL) -> bool:
        return self.max_abs() < tol

    def __add__(self, other: CMatrix) -> CMatrix:
        _check_dims(self, other)
        return CMatrix(self._a + other._a)

    def __sub__(self, other: CMatrix) -> CMatrix:
        _check_dims(self, other)
        return CMatrix(self._a - other._a)

    def __neg__(self) -> CMatrix:
        return CMatrix(-self._a)

    def __mul__(self, scalar: complex) -> CMatrix:
        if isinstance(scalar, CMatrix):
            return NotImplemented
        return CMatrix(complex(scalar) * self._a)

    __rmul__ = __mul__

    def __matmul__(self, other: CMatrix) -> CMatrix:
        return mat_mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CMatrix):
            return NotImplemented
        return self.dim == other.dim and bool(np.array_equal(self._a, other._a))

    def __hash__(self) -> int:
        return hash(self._a.tobytes())

    def __repr__(self) -> str:
        return f"CMatrix({self.rows()!r})"


@dataclass(frozen=True)
class ScalarMatch:
    """Outcome of matching a matrix against ``scale * target``.

    ``scale`` is None when there is no match.
    """

    matched: bool
    scale: complex | None = None
    residual: float = float("nan")


def _check_dims(m: CMatrix, n: CMatrix) -> None:
    if m.dim != n.dim:
        raise DimensionError(f"dimension mismatch: {m.dim}x{m.dim} vs {n.dim}x{n.dim}")


def mat_mul(m: CMatrix, n: CMatrix) -> CMatrix:
    _check_dims(m, n)
    return CMatrix(m.array @ n.array)


def commutator(m: CMatrix, n: CMatrix) -> CMatrix:
    """``[m, n] = m n - n m``."""
    _check_dims(m, n)
    return CMatrix(m.array @ n.array - n.array @ m.array)


def anticommutator(m: CMatrix, n: CMatrix) -> CMatrix:
    """``{m, n} = m n + n m``."""
    _check_dims(m, n)
    return CMatrix(m.array @ n.array + n.array @ m.array)


def frobenius_distance(m: CMatrix, n: CMatrix) -> float:
    _check_dims(m, n)
    return float(np.sqrt(np.sum(np.abs(m.array - n.array) ** 2)))


def max_entry_distance(m: CMatrix, n: CMatrix) -> float:
    _check_dims(m, n)
    return float(np.max(np.abs(m.array - n.array)))


def is_hermitian(m: CMatrix, tol: float = DEFAULT_TOL) -> bool:
    return max_entry_distance(m, m.dagger()) < tol


def is_antihermitian(m: CMatrix, tol: float = DEFAULT_TOL) -> bool:
    return float(np.max(np.abs(m.array + m.array.conj().T))) < tol


def scalar_multiple_of(m: CMatrix, target: CMatrix, tol: float = DEFAULT_TOL) -> ScalarMatch:
    """Test whether ``m`` equals ``c * target`` for some complex ``c``.

    The best ``c`` is the Frobenius projection ``<target, m> / <target, target>``.
    A match needs the max-entry residual below ``tol`` and ``|c| > tol``, so a
    zero matrix never matches anything.
    """
    _check_dims(m, target)
    t = target.array
    norm2 = float(np.sum(np.abs(t) ** 2))
    if norm2 == 0.0:
        raise ValueError("cannot match against the zero matrix")
    c = complex(np.sum(t.conj() * m.array) / norm2)
    residual = float(np.max(np.abs(m.array - c * t)))
    if residual < tol and abs(c) > tol:
        return ScalarMatch(True, c, residual)
    return ScalarMatch(False, None, residual)


"""Pauli matrices, spin-1/2 operators and checks of their algebra."""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .algebra import CMatrix, anticommutator, commutator, mat_mul


class Axis(enum.Enum):
    X = "X"
    Y = "Y"
    Z = "Z"


class Ladder(enum.Enum):
    PLUS = "Plus"
    MINUS = "Minus"


_PAULI = {
    Axis.X: CMatrix([[0, 1], [1, 0]]),
    Axis.Y: CMatrix([[0, -1j], [1j, 0]]),
    Axis.Z: CMatrix([[1, 0], [0, -1]]),
}

IDENTITY = CMatrix.identity(2)


@dataclass(frozen=True)
class SpinConfig:
    hbar: float = 1.0

    def __post_init__(self):
        if not self.hbar > 0:
            raise ValueError("hbar must be positive")


@dataclass(frozen=True)
class AlgebraReport:
    squares_ok: bool
    anticommutation_ok: bool
    commutation_ok: bool
    max_residual: float

    @property
    def ok(self) -> bool:
        return self.squares_ok and self.anticommutation_ok and self.commutation_ok


def pauli(axis: Axis | str) -> CMatrix:
    return _PAULI[Axis(axis)]


def spin_operator(axis: Axis | str, cfg: SpinConfig = SpinConfig()) -> CMatrix:
    return (cfg.hbar / 2) * pauli(axis)


def ladder(sign: Ladder | str, cfg: SpinConfig = SpinConfig()) -> CMatrix:
    """``S+ = Sx + i Sy`` or ``S- = Sx - i Sy`` for spin 1/2."""
    s = 1j if Ladder(sign) is Ladder.PLUS else -1j
    return spin_operator(Axis.X, cfg) + s * spin_operator(Axis.Y, cfg)


def spin_squared(cfg: SpinConfig = SpinConfig()) -> CMatrix:
    total = CMatrix.zeros(2)
    for ax in Axis:
        op = spin_operator(ax, cfg)
        total = total + op @ op
    return total


def ladder_coefficient(s: float, m: float, sign: Ladder | str) -> float:
    """``sqrt(s(s+1) - m(m +/- 1))``; the factor hbar is left to the caller."""
    if s < 0 or (2 * s) != int(2 * s):
        raise ValueError(f"spin must be a non-negative half-integer, got {s}")
    if abs(m) > s or (s - m) != int(s - m):
        raise ValueError(f"m = {m} is not on the ladder of spin {s}")
    step = 1 if Ladder(sign) is Ladder.PLUS else -1
    return math.sqrt(s * (s + 1) - m * (m + step))


def levi_civita(j: Axis | str, k: Axis | str, l: Axis | str) -> int:
    order = list(Axis)
    idx = [order.index(Axis(x)) for x in (j, k, l)]
    if len(set(idx)) < 3:
        return 0
    # Cyclic shifts of (0, 1, 2) are the even permutations.
    return 1 if (idx[1] - idx[0]) % 3 == 1 else -1


def verify_algebra(tol: float = 1e-12, matrices: dict[Axis, CMatrix] | None = None) -> AlgebraReport:
    """Check squares, anticommutators and commutators over every index combination.

    ``matrices`` overrides the Pauli set, so a corrupted set can be fed in to
    confirm that faults are caught.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    sig = dict(_PAULI if matrices is None else matrices)
    residuals = {"sq": 0.0, "anti": 0.0, "comm": 0.0}

    def resid(m: CMatrix, expected: np.ndarray) -> float:
        return float(np.max(np.abs(m.array - expected)))

    for j in Axis:
        residuals["sq"] = max(residuals["sq"], resid(mat_mul(sig[j], sig[j]), IDENTITY.array))
    for j, k in itertools.product(Axis, repeat=2):
        delta = 1.0 if j is k else 0.0
        residuals["anti"] = max(residuals["anti"],
                                resid(anticommutator(sig[j], sig[k]), 2 * delta * IDENTITY.array))
        expected = sum(2j * levi_civita(j, k, l) * sig[l].array for l in Axis)
        residuals["comm"] = max(residuals["comm"], resid(commutator(sig[j], sig[k]), expected))
    return AlgebraReport(
        squares_ok=residuals["sq"] < tol,
        anticommutation_ok=residuals["anti"] < tol,
        commutation_ok=residuals["comm"] < tol,
        max_residual=max(residuals.values()),
    )

"""Jones vectors for fully polarized plane waves."""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

NORM_TOL = 1e-12


class DegeneratePolarization(ValueError):
    """A zero field vector has no polarization state."""


class StandardState(enum.Enum):
    LinearX = "LinearX"
    LinearY = "LinearY"
    CircularRight = "CircularRight"
    CircularLeft = "CircularLeft"

    @property
    def label(self) -> str:
        return _LABELS[self]


_LABELS = {
    StandardState.LinearX: "J1",
    StandardState.LinearY: "J2",
    StandardState.CircularRight: "J3",
    StandardState.CircularLeft: "J4",
}


@dataclass(frozen=True)
class JonesVector:
    """Normalized pair of complex field amplitudes ``(ex, ey)``.

    The global phase is kept exactly as constructed.
    """

    ex: complex
    ey: complex

    def __post_init__(self):
        object.__setattr__(self, "ex", complex(self.ex))
        object.__setattr__(self, "ey", complex(self.ey))
        if not (cmath.isfinite(self.ex) and cmath.isfinite(self.ey)):
            raise ValueError("Jones vector components must be finite")
        n = abs(self.ex) ** 2 + abs(self.ey) ** 2
        if abs(n - 1.0) > NORM_TOL:
            raise ValueError(f"Jones vector is not normalized (|ex|^2+|ey|^2 = {n!r}); use make_jones")

    def __iter__(self):
        yield self.ex
        yield self.ey

    def as_array(self) -> np.ndarray:
        return np.array([self.ex, self.ey], dtype=complex)

    def conj(self) -> tuple[complex, complex]:
        return (self.ex.conjugate(), self.ey.conjugate())

    def scaled_phase(self, phi: float) -> JonesVector:
        """Multiply both components by ``exp(i phi)``."""
        w = cmath.exp(1j * phi)
        return JonesVector(w * self.ex, w * self.ey)


@dataclass(frozen=True)
class PlaneWaveParams:
    k: float
    w: float

    def __post_init__(self):
        if not (self.k > 0 and self.w > 0):
            raise ValueError("wave number and angular frequency must be positive")


def make_jones(ex: complex, ey: complex) -> JonesVector:
    """Normalize raw complex amplitudes into a Jones vector."""
    ex, ey = complex(ex), complex(ey)
    norm = math.sqrt(abs(ex) ** 2 + abs(ey) ** 2)
    if norm == 0.0:
        raise DegeneratePolarization("zero field vector has no polarization state")
    if not math.isfinite(norm):
        raise ValueError("field amplitudes must be finite")
    return JonesVector(ex / norm, ey / norm)


def from_amplitude_phase(a: float, b: float, delta: float) -> JonesVector:
    """Jones vector ``(a, b e^{i delta})`` normalized."""
    return make_jones(a, b * cmath.exp(1j * delta))


_R2 = 1 / math.sqrt(2)
_STANDARD = {
    StandardState.LinearX: (1, 0),
    StandardState.LinearY: (0, 1),
    StandardState.CircularRight: (_R2, -1j * _R2),
    StandardState.CircularLeft: (_R2, 1j * _R2),
}


def standard_state(name: StandardState | str) -> JonesVector:
    if isinstance(name, str):
        try:
            name = StandardState(name)
        except ValueError:
            raise ValueError(f"unknown polarization state {name!r}; "
                             f"expected one of {[s.value for s in StandardState]}") from None
    return JonesVector(*_STANDARD[name])


def inner_norm(j: JonesVector) -> float:
    """``Re(J . J*)``, which is 1 for any properly normalized state."""
    return (j.ex * j.ex.conjugate() + j.ey * j.ey.conjugate()).real


def field_at_phase(j: JonesVector, phase: float) -> tuple[float, float]:
    """Physical (real) field components at propagation phase ``kz - wt``."""
    w = cmath.exp(1j * phase)
    return ((j.ex * w).real, (j.ey * w).real)


def evaluate_field(j: JonesVector, p: PlaneWaveParams, z: float, t: float) -> tuple[float, float]:
    return field_at_phase(j, p.k * z - p.w * t)


def equal_up_to_global_phase(u: JonesVector, v: JonesVector, tol: float = 1e-12) -> bool:
    """True when ``u = e^{i phi} v`` for some real ``phi``."""
    overlap = v.ex.conjugate() * u.ex + v.ey.conjugate() * u.ey
    if abs(overlap) == 0.0:
        return False
    w = overlap / abs(overlap)
    return max(abs(u.ex - w * v.ex), abs(u.ey - w * v.ey)) < tol

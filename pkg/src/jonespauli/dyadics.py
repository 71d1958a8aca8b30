"""Dyads built from Jones vectors, and the closed-form commutator entries.

Two readings of the parameters are supported:

* ``PHASE``: amplitudes A, B, C, D are real and the phases alpha, beta are
  separate, so ``J1 ~ (A, B e^{i alpha})`` and ``J2 ~ (C, D e^{i beta})``.
* ``LITERAL``: amplitudes may be complex literals (``B = i``) and are
  substituted into the printed 2x2 grids with the phases kept on top of them.

For real amplitudes the two readings give identical matrices.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .algebra import SUPPORTED_DIMS, CMatrix, DimensionError, commutator
from .jones import DegeneratePolarization, JonesVector

DEGENERATE_NORM = 1e-12


class Reading(enum.Enum):
    PHASE = "PhaseReading"
    LITERAL = "LiteralComplexReading"


@dataclass(frozen=True)
class DyadParams:
    a: complex
    b: complex
    alpha: float
    c: complex
    d: complex
    beta: float

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "beta", float(self.beta))
        if math.hypot(abs(self.a), abs(self.b)) < DEGENERATE_NORM:
            raise DegeneratePolarization("first Jones vector has zero norm (A = B = 0)")
        if math.hypot(abs(self.c), abs(self.d)) < DEGENERATE_NORM:
            raise DegeneratePolarization("second Jones vector has zero norm (C = D = 0)")

    @property
    def is_real(self) -> bool:
        return all(z.imag == 0.0 for z in (self.a, self.b, self.c, self.d))

    def as_tuple(self) -> tuple:
        return (self.a, self.b, self.alpha, self.c, self.d, self.beta)


@dataclass(frozen=True)
class Normalizers:
    e: float
    f: float
    g: float


@dataclass(frozen=True)
class ClosedFormEntries:
    a11: complex
    a12: complex
    a21: complex
    a22: complex

    def matrix(self) -> CMatrix:
        return CMatrix([[self.a11, self.a12], [self.a21, self.a22]])


@dataclass(frozen=True)
class ProjectorClosedForm:
    """Off-diagonal (1,2) entry of ``[D_I, D_II]``, printed vs. derived.

    ``printed`` is the bare bracket expression; multiply by ``fg`` to compare
    it with ``derived``, which already includes the normalizers.
    """

    printed: complex
    derived: complex
    fg: float

    @property
    def printed_scaled(self) -> complex:
        return self.fg * self.printed

    @property
    def discrepancy(self) -> float:
        return abs(self.printed_scaled - self.derived)

    def agrees(self, tol: float = 1e-12) -> bool:
        return self.discrepancy < tol


def normalizers(p: DyadParams) -> Normalizers:
    n1 = abs(p.a) ** 2 + abs(p.b) ** 2
    n2 = abs(p.c) ** 2 + abs(p.d) ** 2
    return Normalizers(e=1.0 / (math.sqrt(n1) * math.sqrt(n2)), f=1.0 / n1, g=1.0 / n2)


def _check_reading(p: DyadParams, reading: Reading) -> None:
    if reading is Reading.PHASE and not p.is_real:
        raise ValueError("PhaseReading needs real amplitudes; carry phases in alpha/beta "
                         "or use LiteralComplexReading")


def jones_pair(p: DyadParams, reading: Reading = Reading.PHASE) -> tuple[JonesVector, JonesVector]:
    """The two normalized Jones vectors described by ``p``."""
    _check_reading(p, reading)
    ea, eb = cmath.exp(1j * p.alpha), cmath.exp(1j * p.beta)
    n1 = math.sqrt(abs(p.a) ** 2 + abs(p.b) ** 2)
    n2 = math.sqrt(abs(p.c) ** 2 + abs(p.d) ** 2)
    return JonesVector(p.a / n1, p.b * ea / n1), JonesVector(p.c / n2, p.d * eb / n2)


def outer(u: Iterable[complex], v: Iterable[complex]) -> CMatrix:
    """Dyad ``u v`` with entries ``u_i v_j`` (no conjugation); 2- or 3-vectors."""
    u = np.asarray(list(u), dtype=complex)
    v = np.asarray(list(v), dtype=complex)
    if u.ndim != 1 or u.shape != v.shape:
        raise DimensionError(f"vectors must share one dimension, got {u.shape} and {v.shape}")
    if u.shape[0] not in SUPPORTED_DIMS:
        raise DimensionError(f"dyads are defined for 2- and 3-vectors, got length {u.shape[0]}")
    return CMatrix(np.outer(u, v))


def outer_conj(u: Iterable[complex], v: Iterable[complex]) -> CMatrix:
    """Dyad ``u v*`` with entries ``u_i conj(v_j)``."""
    return outer(u, [complex(z).conjugate() for z in v])


def _printed_pair(p: DyadParams) -> tuple[CMatrix, CMatrix]:
    # The two grids exactly as printed, with amplitudes substituted verbatim.
    A, B, C, D = p.a, p.b, p.c, p.d
    ea, eb = cmath.exp(1j * p.alpha), cmath.exp(1j * p.beta)
    e = normalizers(p).e
    d1 = [[A * C, A * D * eb], [B * C * ea, B * D * ea * eb]]
    d2 = [[A * C, C * B * ea], [D * A * eb, B * D * ea * eb]]
    return CMatrix(e * np.array(d1)), CMatrix(e * np.array(d2))


def build_pair(p: DyadParams, reading: Reading = Reading.PHASE) -> tuple[CMatrix, CMatrix]:
    """Return ``(D1, D2) = (J1 J2, J2 J1)``."""
    _check_reading(p, reading)
    if reading is Reading.LITERAL:
        return _printed_pair(p)
    j1, j2 = jones_pair(p, reading)
    return outer(j1, j2), outer(j2, j1)


def build_projectors(p: DyadParams, reading: Reading = Reading.PHASE) -> tuple[CMatrix, CMatrix]:
    """Return ``(D_I, D_II) = (J1 J1*, J2 J2*)``.

    Under either reading these are true conjugated dyads, so both are
    Hermitian, idempotent and of unit trace.
    """
    j1, j2 = jones_pair(p, reading)
    return outer_conj(j1, j1), outer_conj(j2, j2)


def printed_projector_ii(p: DyadParams) -> CMatrix:
    """Second projector grid as printed, off-diagonal ``AB`` and prefactor ``E`` included."""
    A, B, C, D = p.a, p.b, p.c, p.d
    eb = cmath.exp(1j * p.beta)
    e = normalizers(p).e
    return CMatrix(e * np.array([[C * C, A * B / eb], [A * B * eb, D * D]]))


def commutator_closed_form(p: DyadParams) -> ClosedFormEntries:
    """The printed entries of ``[D1, D2] / E^2``, evaluated numerically."""
    A, B, C, D = p.a, p.b, p.c, p.d
    ea, eb = cmath.exp(1j * p.alpha), cmath.exp(1j * p.beta)
    e2a, e2b = ea * ea, eb * eb
    a11 = A**2 * e2b * D**2 - e2a * B**2 * C**2
    a12 = (-A**2 * eb * C * D + ea * A * B * (C**2 + e2b * D**2)
           - B**2 * C * D * cmath.exp(1j * (2 * p.alpha + p.beta)))
    a21 = (-A**2 * eb * C * D + ea * A * B * (C**2 + e2b * D**2)
           - B**2 * C * D * cmath.exp(1j * (2 * p.alpha + p.beta)))
    a22 = B**2 * C**2 * e2a - A**2 * D**2 * e2b
    return ClosedFormEntries(a11, a12, a21, a22)


def closed_form_commutator(p: DyadParams) -> CMatrix:
    """``E^2`` times the closed-form entries: should equal ``[D1, D2]``."""
    return normalizers(p).e ** 2 * commutator_closed_form(p).matrix()


def projector_commutator_closed_form(p: DyadParams) -> ProjectorClosedForm:
    """Printed and derived (1,2) entries of ``[D_I, D_II]``.

    The derived entry comes from multiplying the conjugated dyads out by hand:
    ``FG [C D* e^{-i beta} (|A|^2 - |B|^2) + A B* e^{-i alpha} (|D|^2 - |C|^2)]``.
    For real amplitudes the two forms coincide exactly when ``CD = AB``.
    """
    A, B, C, D = p.a, p.b, p.c, p.d
    ea, eb = cmath.exp(1j * p.alpha), cmath.exp(1j * p.beta)
    nz = normalizers(p)
    fg = nz.f * nz.g
    printed = A * B * cmath.exp(-1j * (p.alpha + p.beta)) * ((A**2 - B**2) * ea + (D**2 - C**2) * eb)
    derived = fg * (C * D.conjugate() / eb * (abs(A) ** 2 - abs(B) ** 2)
                    + A * B.conjugate() / ea * (abs(D) ** 2 - abs(C) ** 2))
    return ProjectorClosedForm(printed=printed, derived=derived, fg=fg)

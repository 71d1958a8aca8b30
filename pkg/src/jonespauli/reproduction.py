"""Re-run the three worked cases (sigma_x, sigma_y, sigma_z claims) and record what holds.

Each case is evaluated under both parameter readings. The matrix that goes
into a report comes from the brute-force :mod:`jonespauli.oracle`; the
numpy-backed dyadics path is computed too and the two must agree.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from . import oracle
from .algebra import (
    DEFAULT_TOL,
    CMatrix,
    ScalarMatch,
    commutator,
    is_antihermitian,
    max_entry_distance,
    scalar_multiple_of,
)
from .dyadics import (
    DyadParams,
    ProjectorClosedForm,
    Reading,
    build_pair,
    build_projectors,
    normalizers,
    printed_projector_ii,
    projector_commutator_closed_form,
)
from .pauli import IDENTITY, Axis, pauli

HALF_PI = math.pi / 2


class Construction(enum.Enum):
    PAIR = "PairDyads"
    PROJECTOR = "ProjectorDyads"


@dataclass(frozen=True)
class CaseSpec:
    case_id: int
    construction: Construction
    prefactor: float
    claimed: Axis
    params: dict  # Reading -> DyadParams


# "B = i" is read either as b = 1 with alpha = pi/2 (phase reading) or as the
# literal complex amplitude on top of the stated phase (literal reading).
# Case 2 states no phases; the literal reading reuses case 1's alpha = beta = pi/2.
CASES = {
    1: CaseSpec(1, Construction.PAIR, 0.5, Axis.X, {
        Reading.PHASE: DyadParams(1, 1, HALF_PI, 1, 1, HALF_PI),
        Reading.LITERAL: DyadParams(1, 1j, HALF_PI, 1, 1j, HALF_PI),
    }),
    2: CaseSpec(2, Construction.PROJECTOR, 2.0, Axis.Y, {
        Reading.PHASE: DyadParams(-1, 1, HALF_PI, 0, 1, HALF_PI),
        Reading.LITERAL: DyadParams(-1, 1j, HALF_PI, 0, 1j, HALF_PI),
    }),
    3: CaseSpec(3, Construction.PAIR, 1.0, Axis.Z, {
        Reading.PHASE: DyadParams(1, 0, 0, 0, 1, 0),
        Reading.LITERAL: DyadParams(1, 0, 0, 0, 1, 0),
    }),
}

# Polarization states that the text attaches to case 2: (i/sqrt2)(1, i) and i(0, 1).
CASE2_STATED_STATES = (
    (1j / math.sqrt(2), -1 / math.sqrt(2)),
    (0j, 1j),
)

TARGETS = {
    "SigmaX": pauli(Axis.X),
    "SigmaY": pauli(Axis.Y),
    "SigmaZ": pauli(Axis.Z),
    "Identity": IDENTITY,
}


@dataclass(frozen=True)
class CaseReport:
    case_id: int
    reading: Reading
    construction: Construction
    prefactor: float
    params: DyadParams
    computed: CMatrix
    claimed: CMatrix
    claimed_name: str
    exact_match: bool
    exact_residual: float
    scalar_match: ScalarMatch
    crosscheck_residual: float
    antihermitian: bool
    other_matches: dict = field(default_factory=dict)
    note: str = ""


@dataclass(frozen=True)
class StatedStateCheck:
    """Case 2 redone from the polarization states quoted in the text."""

    computed: CMatrix
    scalar_match: ScalarMatch
    antihermitian: bool
    other_matches: dict


@dataclass(frozen=True)
class DiscrepancyReport:
    cases: list
    projector_closed_form: list  # (label, DyadParams, ProjectorClosedForm)
    printed_projector_ii_residual: float
    case2_stated_states: StatedStateCheck


def _oracle_construction(case: CaseSpec, p: DyadParams):
    args = p.as_tuple()
    if case.construction is Construction.PAIR:
        return oracle.pair_dyads(*args)
    return oracle.projector_dyads(*args)


def _library_construction(case: CaseSpec, p: DyadParams, reading: Reading):
    if case.construction is Construction.PAIR:
        return build_pair(p, reading)
    return build_projectors(p, reading)


def _matches(m: CMatrix, tol: float) -> dict:
    if m.is_zero(tol):
        return {}
    out = {}
    for name, t in TARGETS.items():
        sm = scalar_multiple_of(m, t, tol)
        if sm.matched:
            out[name] = sm
    return out


def _fmt_scale(c: complex) -> str:
    return f"{c.real:+.6g}{c.imag:+.6g}i"


def _note(case: CaseSpec, computed: CMatrix, exact: bool, sm: ScalarMatch,
          others: dict, tol: float) -> str:
    claim = f"{case.prefactor:g} x commutator = sigma_{case.claimed.value.lower()}"
    if exact:
        return f"reproduced: {claim} holds"
    if computed.is_zero(tol):
        return f"not reproduced: claimed {claim}, but the commutator is the zero matrix"
    if sm.matched:
        return (f"not reproduced exactly: result is {_fmt_scale(sm.scale)} times "
                f"sigma_{case.claimed.value.lower()}")
    found = ", ".join(f"{_fmt_scale(v.scale)} x {k}" for k, v in others.items()) or "no Pauli multiple"
    return f"not reproduced: claimed {claim}, result is {found}"


def run_case(case_id: int, reading: Reading | str = Reading.PHASE, tol: float = DEFAULT_TOL) -> CaseReport:
    """Evaluate one worked case; the claimed matrix is never assumed to be right."""
    case = CASES[int(case_id)]
    reading = Reading(reading)
    p = case.params[reading]

    m, n = _oracle_construction(case, p)
    raw = oracle.commutator(m, n)
    computed = CMatrix(oracle.scale(case.prefactor, raw))

    lm, ln = _library_construction(case, p, reading)
    crosscheck = max_entry_distance(case.prefactor * commutator(lm, ln), computed)

    claimed = pauli(case.claimed)
    resid = max_entry_distance(computed, claimed)
    exact = resid < tol
    sm = scalar_multiple_of(computed, claimed, tol)
    others = _matches(computed, tol)
    return CaseReport(
        case_id=case.case_id,
        reading=reading,
        construction=case.construction,
        prefactor=case.prefactor,
        params=p,
        computed=computed,
        claimed=claimed,
        claimed_name=f"Sigma{case.claimed.value}",
        exact_match=exact,
        exact_residual=resid,
        scalar_match=sm,
        crosscheck_residual=crosscheck,
        antihermitian=is_antihermitian(CMatrix(raw), tol),
        other_matches=others,
        note=_note(case, computed, exact, sm, others, tol),
    )


def case2_from_stated_states(tol: float = DEFAULT_TOL) -> StatedStateCheck:
    u, v = CASE2_STATED_STATES
    raw = oracle.commutator(oracle.dyad_conj(u, u), oracle.dyad_conj(v, v))
    computed = CMatrix(oracle.scale(CASES[2].prefactor, raw))
    return StatedStateCheck(
        computed=computed,
        scalar_match=scalar_multiple_of(computed, pauli(Axis.Y), tol),
        antihermitian=is_antihermitian(CMatrix(raw), tol),
        other_matches=_matches(computed, tol),
    )


def discrepancy_report(tol: float = DEFAULT_TOL, cases=(1, 2, 3)) -> DiscrepancyReport:
    """All requested cases under both readings, ordered by case then reading."""
    reports = [run_case(c, r, tol) for c in cases for r in (Reading.PHASE, Reading.LITERAL)]

    probes = [
        ("case2-phase", CASES[2].params[Reading.PHASE]),
        ("case2-literal", CASES[2].params[Reading.LITERAL]),
        ("all-ones", DyadParams(1, 1, 0.3, 1, 1, 1.1)),
        ("generic", DyadParams(1, 2, 0.3, 3, 1, 1.1)),
        ("case3", CASES[3].params[Reading.PHASE]),
    ]
    closed = [(label, p, projector_commutator_closed_form(p)) for label, p in probes]

    p = CASES[2].params[Reading.PHASE]
    _, dii = build_projectors(p)
    dii_resid = max_entry_distance(printed_projector_ii(p), dii)

    return DiscrepancyReport(
        cases=reports,
        projector_closed_form=closed,
        printed_projector_ii_residual=dii_resid,
        case2_stated_states=case2_from_stated_states(tol),
    )


def projector_closed_form_summary(entry: tuple[str, DyadParams, ProjectorClosedForm]) -> dict:
    label, p, pcf = entry
    return {"label": label, "printed_scaled": pcf.printed_scaled, "derived": pcf.derived,
            "agrees": pcf.agrees(), "discrepancy": pcf.discrepancy,
            "fg": pcf.fg, "e": normalizers(p).e}


def strict_ok(report: DiscrepancyReport) -> bool:
    return all(c.exact_match for c in report.cases)


def crosscheck_ok(report: DiscrepancyReport, tol: float = 1e-12) -> bool:
    return all(np.isfinite(c.crosscheck_residual) and c.crosscheck_residual < tol for c in report.cases)

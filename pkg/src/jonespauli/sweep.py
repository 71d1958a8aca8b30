"""Grid search over dyad parameters for Pauli matrices up to a complex scalar."""
from __future__ import annotations

import itertools
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import oracle
from .algebra import DEFAULT_TOL, CMatrix, is_hermitian, max_entry_distance, scalar_multiple_of
from .dyadics import DyadParams, Reading, build_pair, build_projectors
from .reproduction import TARGETS, Construction

COMBINATORS = ("Commutator", "Anticommutator", "Difference")
CONSTRUCTIONS = tuple(c.value for c in Construction)
TARGET_NAMES = tuple(TARGETS)


class SweepError(ValueError):
    pass


@dataclass(frozen=True)
class SweepConfig:
    amplitudes: tuple = (0.0, 1.0, -1.0)
    phases: tuple = (0.0, math.pi / 2, math.pi, 3 * math.pi / 2)
    combinators: tuple = COMBINATORS
    constructions: tuple = CONSTRUCTIONS
    targets: tuple = TARGET_NAMES
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        for name in ("amplitudes", "phases", "combinators", "constructions", "targets"):
            vals = tuple(getattr(self, name))
            if not vals:
                raise SweepError(f"{name} must not be empty")
            object.__setattr__(self, name, vals)
        object.__setattr__(self, "amplitudes", tuple(float(a) for a in self.amplitudes))
        object.__setattr__(self, "phases", tuple(float(a) for a in self.phases))
        for name, allowed in (("combinators", COMBINATORS), ("constructions", CONSTRUCTIONS),
                              ("targets", TARGET_NAMES)):
            bad = [v for v in getattr(self, name) if v not in allowed]
            if bad:
                raise SweepError(f"unknown {name}: {bad}; allowed: {list(allowed)}")
        if not (self.tol > 0 and math.isfinite(self.tol)):
            raise SweepError("tol must be a positive finite number")
        if not all(math.isfinite(x) for x in self.amplitudes + self.phases):
            raise SweepError("amplitudes and phases must be finite")


@dataclass(frozen=True)
class SweepMatch:
    params: tuple  # (a, b, alpha, c, d, beta), all real
    construction: str
    combinator: str
    target: str
    scale: complex

    def sort_key(self):
        return (self.params, self.construction, self.combinator, self.target)


@dataclass(frozen=True)
class SweepResult:
    matches: list
    evaluated: int
    skipped_degenerate: int


@dataclass
class SweepSummary:
    total: int = 0
    per_target: dict = field(default_factory=dict)
    per_combinator: dict = field(default_factory=dict)
    per_construction: dict = field(default_factory=dict)
    imaginary_projector_commutator: int = 0
    projector_commutator_hermitian_matches: int = 0
    skipped_degenerate: int = 0
    evaluated: int = 0


def _grid(cfg: SweepConfig):
    amps, phases = cfg.amplitudes, cfg.phases
    for a, b, c, d in itertools.product(amps, repeat=4):
        for alpha, beta in itertools.product(phases, repeat=2):
            yield (a, b, alpha, c, d, beta)


def _is_degenerate(t) -> bool:
    a, b, _, c, d, _ = t
    return (a == 0 and b == 0) or (c == 0 and d == 0)


def combine(kind: str, m: CMatrix, n: CMatrix) -> CMatrix:
    if kind == "Commutator":
        return m @ n - n @ m
    if kind == "Anticommutator":
        return m @ n + n @ m
    if kind == "Difference":
        return m - n
    raise SweepError(f"unknown combinator {kind!r}")


def _construct(kind: str, p: DyadParams):
    if kind == Construction.PAIR.value:
        return build_pair(p, Reading.PHASE)
    return build_projectors(p, Reading.PHASE)


def _evaluate_chunk(args) -> list:
    cfg, tuples = args
    found = []
    targets = [(name, TARGETS[name]) for name in cfg.targets]
    for t in tuples:
        p = DyadParams(*t)
        for construction in cfg.constructions:
            m, n = _construct(construction, p)
            for comb in cfg.combinators:
                cand = combine(comb, m, n)
                if cand.is_zero(cfg.tol):
                    continue
                for name, target in targets:
                    sm = scalar_multiple_of(cand, target, cfg.tol)
                    if sm.matched:
                        found.append(SweepMatch(t, construction, comb, name, sm.scale))
    return found


def sweep(cfg: SweepConfig = SweepConfig(), workers: int = 1) -> SweepResult:
    """Evaluate every grid point; output order never depends on ``workers``."""
    tuples, skipped = [], 0
    for t in _grid(cfg):
        if _is_degenerate(t):
            skipped += 1
        else:
            tuples.append(t)
    if not tuples:
        raise SweepError("parameter grid is empty after removing degenerate tuples")

    if workers <= 1:
        matches = _evaluate_chunk((cfg, tuples))
    else:
        size = math.ceil(len(tuples) / workers)
        chunks = [(cfg, tuples[i:i + size]) for i in range(0, len(tuples), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            matches = [m for part in pool.map(_evaluate_chunk, chunks) for m in part]
    matches.sort(key=SweepMatch.sort_key)
    return SweepResult(matches=matches, evaluated=len(tuples), skipped_degenerate=skipped)


def recompute(match: SweepMatch) -> CMatrix:
    """Rebuild a match's candidate matrix with the brute-force oracle."""
    if match.construction == Construction.PAIR.value:
        m, n = oracle.pair_dyads(*match.params)
    else:
        m, n = oracle.projector_dyads(*match.params)
    return CMatrix(oracle.combine(match.combinator, m, n))


def verify_match(match: SweepMatch, tol: float = DEFAULT_TOL) -> bool:
    target = TARGETS[match.target]
    return max_entry_distance(recompute(match), match.scale * target) < tol


def summarize(result: SweepResult | list, tol: float = DEFAULT_TOL) -> SweepSummary:
    if isinstance(result, SweepResult):
        matches, skipped, evaluated = result.matches, result.skipped_degenerate, result.evaluated
    else:
        matches, skipped, evaluated = list(result), 0, 0
    summary = SweepSummary(total=len(matches), skipped_degenerate=skipped, evaluated=evaluated)
    summary.per_target = dict(Counter(m.target for m in matches))
    summary.per_combinator = dict(Counter(m.combinator for m in matches))
    summary.per_construction = dict(Counter(m.construction for m in matches))
    for m in matches:
        if (m.construction == Construction.PROJECTOR.value and m.combinator == "Commutator"
                and is_hermitian(TARGETS[m.target])):
            summary.projector_commutator_hermitian_matches += 1
            if abs(m.scale.real) < tol:
                summary.imaginary_projector_commutator += 1
    return summary

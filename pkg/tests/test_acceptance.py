"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line that is printed in the pytest terminal
summary. Tolerances and time limits are fixed here and never relaxed.
"""
import itertools
import math
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from jonespauli.algebra import (
    CMatrix,
    anticommutator,
    commutator,
    is_antihermitian,
    max_entry_distance,
    scalar_multiple_of,
)
from jonespauli.cli import dumps_json, loads_json, main, sweep_doc
from jonespauli.dyadics import DyadParams, Reading, build_pair, commutator_closed_form, normalizers, outer_conj
from jonespauli.jones import StandardState, from_amplitude_phase, inner_norm, make_jones, standard_state
from jonespauli.pauli import Axis, Ladder, SpinConfig, ladder, ladder_coefficient, levi_civita, pauli, verify_algebra
from jonespauli.reproduction import run_case
from jonespauli.sweep import SweepConfig, sweep, verify_match

SEED = 1941


@pytest.fixture
def record():
    def _record(number, title, ok, detail=""):
        ACCEPTANCE_LINES.append((number, f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {title}: {detail}"))
        return ok
    return _record


def test_01_pauli_algebra(record):
    t0 = time.perf_counter()
    rep = verify_algebra(1e-12)
    worst = 0.0
    eye = np.eye(2)
    for j, k in itertools.product(Axis, repeat=2):
        sj, sk = pauli(j), pauli(k)
        worst = max(worst, np.max(np.abs(anticommutator(sj, sk).array - 2 * (j is k) * eye)))
        for l in Axis:
            # each of the 27 (j, k, l) terms, checked through its projection on sigma_l
            coeff = np.trace(pauli(l).array @ commutator(sj, sk).array) / 2
            worst = max(worst, abs(coeff - 2j * levi_civita(j, k, l)))
        if j is k:
            worst = max(worst, np.max(np.abs((sj @ sj).array - eye)))
    elapsed = time.perf_counter() - t0
    ok = rep.ok and rep.max_residual < 1e-12 and worst < 1e-12 and elapsed < 1.0
    record(1, "Pauli algebra", ok, f"max residual {max(rep.max_residual, worst):.1e}, {elapsed:.3f}s")
    assert ok


def test_02_closed_form_equivalence(record):
    rng = np.random.default_rng(SEED)
    t0 = time.perf_counter()
    worst, n = 0.0, 0
    while n < 10_000:
        a, b, c, d = rng.uniform(-2, 2, size=4)
        if math.hypot(a, b) < 1e-3 or math.hypot(c, d) < 1e-3:
            continue
        alpha, beta = rng.uniform(0, 2 * np.pi, size=2)
        p = DyadParams(a, b, alpha, c, d, beta)
        direct = commutator(*build_pair(p, Reading.PHASE))
        closed = normalizers(p).e ** 2 * commutator_closed_form(p).matrix()
        worst = max(worst, max_entry_distance(direct, closed))
        n += 1
    elapsed = time.perf_counter() - t0
    ok = worst < 1e-10 and elapsed < 5.0
    record(2, "closed-form commutator entries", ok, f"{n} samples, max error {worst:.1e}, {elapsed:.2f}s")
    assert ok


def test_03_case3_reproduction(record):
    results = [run_case(3, r) for r in Reading]
    target = CMatrix([[1, 0], [0, -1]])
    ok = all(r.exact_match and r.exact_residual == 0 and r.computed == target == r.claimed for r in results)
    record(3, "case 3 gives sigma_z", ok, f"residual {max(r.exact_residual for r in results):g}")
    assert ok


def test_04_case1_discrepancy(record):
    results = [run_case(1, r) for r in Reading]
    zero_resid = max(r.computed.max_abs() for r in results)
    ok = (zero_resid < 1e-12 and not any(r.exact_match for r in results)
          and all("sigma_x" in r.note and "zero matrix" in r.note for r in results)
          and all(r.crosscheck_residual < 1e-12 for r in results))
    record(4, "case 1 commutator is zero, sigma_x claim not reproduced", ok,
           f"zero-matrix residual {zero_resid:.1e}")
    assert ok


def test_05_case2_structural_impossibility(record):
    ok = True
    worst_re = 0.0
    for r in Reading:
        rep = run_case(2, r)
        raw = rep.computed * (1 / rep.prefactor)
        ok &= is_antihermitian(raw, 1e-12) and not rep.exact_match
        for cand in (rep.computed, raw):
            sm = scalar_multiple_of(cand, pauli(Axis.Y))
            if sm.matched:
                worst_re = max(worst_re, abs(sm.scale.real))
        if rep.scalar_match.matched:
            worst_re = max(worst_re, abs(rep.scalar_match.scale.real))
    ok &= worst_re < 1e-9
    record(5, "case 2 projector commutator anti-Hermitian", ok, f"max |Re(scale)| {worst_re:.1e}")
    assert ok


def test_06_projector_invariants(record):
    rng = np.random.default_rng(SEED + 6)
    worst = 0.0
    for _ in range(1000):
        ex, ey = rng.normal(size=2) + 1j * rng.normal(size=2)
        j = make_jones(ex, ey)
        d = outer_conj(j, j)
        worst = max(worst, max_entry_distance(d, d.dagger()), max_entry_distance(d @ d, d),
                    abs(d.trace() - 1))
    ok = worst < 1e-12
    record(6, "projector dyads Hermitian, idempotent, trace 1", ok, f"max residual {worst:.1e}")
    assert ok


def test_07_normalization(record):
    rng = np.random.default_rng(SEED + 7)
    worst = max(abs(inner_norm(standard_state(s)) - 1) for s in StandardState)
    for _ in range(5000):
        ex, ey = rng.normal(size=2) * 10 ** rng.uniform(-3, 3) + 1j * rng.normal(size=2)
        worst = max(worst, abs(inner_norm(make_jones(ex, ey)) - 1))
    for _ in range(5000):
        a, b = rng.uniform(-5, 5, size=2)
        worst = max(worst, abs(inner_norm(from_amplitude_phase(a, b, rng.uniform(0, 2 * np.pi))) - 1))
    ok = worst < 1e-12
    record(7, "Jones normalization J.J* = 1", ok, f"4 standard + 10000 random, max error {worst:.1e}")
    assert ok


def test_08_ladder_operators(record):
    hbar = 1.7
    cfg = SpinConfig(hbar)
    plus, minus = ladder(Ladder.PLUS, cfg), ladder(Ladder.MINUS, cfg)
    ok = (max_entry_distance(plus, CMatrix([[0, hbar], [0, 0]])) < 1e-15
          and max_entry_distance(minus, CMatrix([[0, 0], [hbar, 0]])) < 1e-15
          and ladder_coefficient(0.5, -0.5, Ladder.PLUS) == 1.0
          and ladder_coefficient(0.5, 0.5, Ladder.MINUS) == 1.0
          and np.max(np.abs(plus.array @ np.array([1, 0]))) == 0)
    record(8, "spin-1/2 ladder operators", ok, f"hbar={hbar}")
    assert ok


def test_09_sweep(record):
    cfg = SweepConfig()
    t0 = time.perf_counter()
    first = sweep(cfg)
    elapsed = time.perf_counter() - t0
    again = sweep(cfg)
    parallel = sweep(cfg, workers=4)
    bytes_1 = dumps_json(sweep_doc(cfg, first))
    same = bytes_1 == dumps_json(sweep_doc(cfg, again)) == dumps_json(sweep_doc(cfg, parallel))

    case3 = (1.0, 0.0, 0.0, 0.0, 1.0, 0.0)
    hits = {(m.combinator, m.target): m.scale for m in first.matches
            if m.params == case3 and m.construction == "PairDyads"}
    found = (abs(hits.get(("Commutator", "SigmaZ"), 0) - 1) < 1e-12
             and abs(hits.get(("Difference", "SigmaY"), 0) - 1j) < 1e-12
             and abs(hits.get(("Anticommutator", "Identity"), 0) - 1) < 1e-12)
    verified = all(verify_match(m, cfg.tol) for m in first.matches)
    ok = elapsed < 10.0 and same and found and verified
    record(9, "default sweep", ok, f"{len(first.matches)} matches in {elapsed:.2f}s, deterministic={same}, "
           f"sigma_z/i sigma_y/identity found={found}, self-verified={verified}")
    assert ok


def test_10_cli_contract(record, capsys, tmp_path):
    codes = {}
    codes["reproduce --strict"] = main(["reproduce", "--strict"])
    codes["verify"] = main(["verify"])
    bad = tmp_path / "bad.cfg"
    bad.write_text("amplitudes = 0, one\n", encoding="utf-8")
    codes["sweep bad config"] = main(["sweep", "--config", str(bad)])
    capsys.readouterr()

    round_trip = True
    for argv in (["states"], ["verify"], ["reproduce"], ["sweep"], ["field", "CircularLeft", "--phase", "0.3"]):
        main(["--json", *argv])
        out = capsys.readouterr().out
        round_trip &= dumps_json(loads_json(out)) == out
    ok = codes == {"reproduce --strict": 1, "verify": 0, "sweep bad config": 2} and round_trip
    record(10, "CLI exit codes and JSON round-trip", ok, f"codes {codes}, round-trip={round_trip}")
    assert ok

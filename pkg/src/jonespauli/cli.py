"""Command-line entry point: ``jonespauli {states,verify,reproduce,sweep,field}``.

Exit codes: 0 success, 1 a check failed, 2 invalid input or config.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import __version__
from .algebra import CMatrix, ScalarMatch, max_entry_distance
from .config import ConfigError, default_config, load_config
from .dyadics import DyadParams, outer_conj
from .jones import StandardState, field_at_phase, inner_norm, make_jones, standard_state
from .pauli import verify_algebra
from .reproduction import (
    DiscrepancyReport,
    discrepancy_report,
    projector_closed_form_summary,
    strict_ok,
)
from .sweep import SweepConfig, SweepError, SweepMatch, SweepResult, summarize, sweep

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2

VERIFY_TOL = 1e-12
MATCH_TOL = 1e-9
PROJECTOR_SAMPLES = 1000


# -- JSON encoding ----------------------------------------------------------
# Floats go through repr (shortest round-trip form), so a document re-read
# and re-dumped with dumps_json is byte-identical.

def cjson(z: complex) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def mjson(m: CMatrix) -> list:
    return [[cjson(z) for z in row] for row in m.rows()]


def match_json(sm: ScalarMatch) -> dict:
    return {"matched": sm.matched, "scale": cjson(sm.scale) if sm.matched else None,
            "residual": sm.residual}


def params_json(p) -> dict:
    if isinstance(p, DyadParams):
        vals = p.as_tuple()
    else:
        vals = tuple(p)
    names = ("a", "b", "alpha", "c", "d", "beta")
    return {k: (cjson(v) if isinstance(v, complex) else v) for k, v in zip(names, vals)}


def dumps_json(doc) -> str:
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def loads_json(text: str):
    return json.loads(text)


def fmt(z: complex | float) -> str:
    z = complex(z)
    re = 0.0 if abs(z.real) < 5e-7 else z.real
    im = 0.0 if abs(z.imag) < 5e-7 else z.imag
    if im == 0.0:
        return f"{re:.6g}"
    if re == 0.0:
        return f"{im:.6g}i"
    return f"{re:.6g}{im:+.6g}i"


def fmt_matrix(m: CMatrix) -> str:
    return "[" + ", ".join("[" + ", ".join(fmt(z) for z in row) + "]" for row in m.rows()) + "]"


# -- commands ---------------------------------------------------------------

def states_doc() -> list:
    out = []
    for s in StandardState:
        j = standard_state(s)
        out.append({"name": s.value, "label": s.label,
                    "ex_re": j.ex.real, "ex_im": j.ex.imag,
                    "ey_re": j.ey.real, "ey_im": j.ey.imag,
                    "inner_norm": inner_norm(j)})
    return out


def cmd_states(args) -> tuple[object, str, int]:
    doc = states_doc()
    lines = [f"{d['label']}  {d['name']:<14} ({fmt(complex(d['ex_re'], d['ex_im']))}, "
             f"{fmt(complex(d['ey_re'], d['ey_im']))})  J.J* = {fmt(d['inner_norm'])}" for d in doc]
    return doc, "\n".join(lines), EXIT_OK


def projector_invariants(n: int = PROJECTOR_SAMPLES, seed: int = 0) -> float:
    """Worst violation of D = D^dagger, D^2 = D, tr D = 1 over random states."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n):
        ex, ey = rng.normal(size=2) + 1j * rng.normal(size=2)
        j = make_jones(ex, ey)
        d = outer_conj(j, j)
        worst = max(worst, max_entry_distance(d, d.dagger()),
                    max_entry_distance(d @ d, d), abs(d.trace() - 1))
    return worst


def cmd_verify(args) -> tuple[object, str, int]:
    tol = VERIFY_TOL if args.tol is None else args.tol
    rep = verify_algebra(tol)
    proj = projector_invariants()
    proj_ok = proj < tol
    ok = rep.ok and proj_ok
    doc = {"squares_ok": rep.squares_ok, "anticommutation_ok": rep.anticommutation_ok,
           "commutation_ok": rep.commutation_ok, "max_residual": rep.max_residual,
           "projector_invariants_ok": proj_ok, "projector_max_residual": proj,
           "tol": tol, "ok": ok}
    text = "\n".join([
        f"sigma_j^2 = I                   {'ok' if rep.squares_ok else 'FAIL'}",
        f"{{sigma_j, sigma_k}} = 2 delta I  {'ok' if rep.anticommutation_ok else 'FAIL'}",
        f"[sigma_j, sigma_k] = 2i eps sigma {'ok' if rep.commutation_ok else 'FAIL'}",
        f"max residual                    {rep.max_residual:.3g}",
        f"projector invariants ({PROJECTOR_SAMPLES} states) {'ok' if proj_ok else 'FAIL'} "
        f"(max residual {proj:.3g})",
        f"tol {tol:g}: {'PASS' if ok else 'FAIL'}",
    ])
    return doc, text, EXIT_OK if ok else EXIT_FAIL


def report_doc(report: DiscrepancyReport) -> dict:
    cases = []
    for c in report.cases:
        cases.append({
            "case": c.case_id, "reading": c.reading.value, "construction": c.construction.value,
            "prefactor": c.prefactor, "params": params_json(c.params),
            "computed": mjson(c.computed), "claimed": mjson(c.claimed), "claimed_name": c.claimed_name,
            "exact_match": c.exact_match, "exact_residual": c.exact_residual,
            "scale": cjson(c.scalar_match.scale) if c.scalar_match.matched else None,
            "scalar_match": match_json(c.scalar_match),
            "other_matches": {k: cjson(v.scale) for k, v in c.other_matches.items()},
            "antihermitian_commutator": c.antihermitian,
            "crosscheck_residual": c.crosscheck_residual,
            "note": c.note,
        })
    closed = []
    for entry in report.projector_closed_form:
        s = projector_closed_form_summary(entry)
        closed.append({"label": s["label"], "params": params_json(entry[1]),
                       "printed_scaled": cjson(s["printed_scaled"]), "derived": cjson(s["derived"]),
                       "agrees": s["agrees"], "discrepancy": s["discrepancy"]})
    st = report.case2_stated_states
    return {
        "cases": cases,
        "projector_closed_form": closed,
        "printed_projector_ii_residual": report.printed_projector_ii_residual,
        "case2_stated_states": {
            "computed": mjson(st.computed), "scalar_match_sigma_y": match_json(st.scalar_match),
            "antihermitian_commutator": st.antihermitian,
            "other_matches": {k: cjson(v.scale) for k, v in st.other_matches.items()},
        },
        "strict_ok": strict_ok(report),
    }


def cmd_reproduce(args) -> tuple[object, str, int]:
    tol = MATCH_TOL if args.tol is None else args.tol
    cases = (1, 2, 3) if args.case == "all" else (int(args.case),)
    report = discrepancy_report(tol, cases=cases)
    doc = report_doc(report)
    lines = []
    for c in report.cases:
        lines.append(f"case {c.case_id} [{c.reading.value}] {c.construction.value} "
                     f"x{c.prefactor:g}: {fmt_matrix(c.computed)} vs {c.claimed_name} "
                     f"-> exact {'yes' if c.exact_match else 'no'}")
        lines.append(f"    {c.note}")
    for d in doc["projector_closed_form"]:
        lines.append(f"off-diagonal [D_I, D_II] closed form ({d['label']}): "
                     f"printed {fmt(complex(d['printed_scaled']['re'], d['printed_scaled']['im']))}, "
                     f"derived {fmt(complex(d['derived']['re'], d['derived']['im']))} "
                     f"-> {'agree' if d['agrees'] else 'DISAGREE'}")
    lines.append(f"printed D_II grid vs J2 J2*: max entry difference "
                 f"{fmt(report.printed_projector_ii_residual)}")
    st = report.case2_stated_states
    lines.append(f"case 2 from stated states: {fmt_matrix(st.computed)}; sigma_y multiple: "
                 f"{'yes' if st.scalar_match.matched else 'no'}")
    code = EXIT_FAIL if (args.strict and not strict_ok(report)) else EXIT_OK
    return doc, "\n".join(lines), code


def config_json(cfg: SweepConfig) -> dict:
    return {"amplitudes": list(cfg.amplitudes), "phases_rad": list(cfg.phases),
            "combinators": list(cfg.combinators), "constructions": list(cfg.constructions),
            "targets": list(cfg.targets), "tol": cfg.tol}


def sweep_doc(cfg: SweepConfig, result: SweepResult) -> dict:
    s = summarize(result, cfg.tol)
    return {
        "config": config_json(cfg),
        "summary": {
            "total": s.total, "evaluated": s.evaluated, "skipped_degenerate": s.skipped_degenerate,
            "per_target": dict(sorted(s.per_target.items())),
            "per_combinator": dict(sorted(s.per_combinator.items())),
            "per_construction": dict(sorted(s.per_construction.items())),
            "projector_commutator_hermitian_matches": s.projector_commutator_hermitian_matches,
            "imaginary_projector_commutator": s.imaginary_projector_commutator,
        },
        "matches": [match_record(m) for m in result.matches],
    }


def match_record(m: SweepMatch) -> dict:
    return {"params": params_json(m.params), "construction": m.construction,
            "combinator": m.combinator, "target": m.target, "scale": cjson(m.scale)}


def cmd_sweep(args) -> tuple[object, str, int]:
    cfg = default_config() if args.config is None else load_config(args.config)
    if args.tol is not None:
        cfg = SweepConfig(cfg.amplitudes, cfg.phases, cfg.combinators, cfg.constructions,
                          cfg.targets, args.tol)
    if args.workers < 1:
        raise ValueError("--workers must be at least 1")
    result = sweep(cfg, workers=args.workers)
    doc = sweep_doc(cfg, result)
    s = doc["summary"]
    lines = [f"evaluated {s['evaluated']} parameter tuples, skipped {s['skipped_degenerate']} degenerate, "
             f"{s['total']} matches"]
    lines += [f"  target {k}: {v}" for k, v in s["per_target"].items()]
    lines += [f"  combinator {k}: {v}" for k, v in s["per_combinator"].items()]
    if not args.summary_only:
        for m in result.matches:
            a, b, al, c, d, be = m.params
            lines.append(f"A={a:g} B={b:g} alpha={math.degrees(al):g}deg C={c:g} D={d:g} "
                         f"beta={math.degrees(be):g}deg  {m.construction} {m.combinator} "
                         f"= ({fmt(m.scale)}) {m.target}")
    return doc, "\n".join(lines), EXIT_OK


def cmd_field(args) -> tuple[object, str, int]:
    j = standard_state(args.state)
    fx, fy = field_at_phase(j, args.phase)
    doc = {"state": args.state, "phase": args.phase, "fx": fx, "fy": fy}
    return doc, f"({fmt(fx)}, {fmt(fy)})", EXIT_OK


# -- argument parsing -------------------------------------------------------

def _positive_float(s: str) -> float:
    try:
        x = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {s!r}") from None
    if not (x > 0 and math.isfinite(x)):
        raise argparse.ArgumentTypeError(f"tolerance must be positive, got {s}")
    return x


def _state(s: str) -> str:
    names = [st.value for st in StandardState]
    if s not in names:
        raise argparse.ArgumentTypeError(f"unknown state {s!r}; choose from {names}")
    return s


def build_parser() -> argparse.ArgumentParser:
    # Global flags are accepted before or after the subcommand.
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--tol", type=_positive_float, help="comparison tolerance")
    common.add_argument("--strict", action="store_true",
                        help="treat unreproduced claims as failures (exit 1)")

    parser = argparse.ArgumentParser(prog="jonespauli", parents=[common],
                                     description="Jones vectors, dyads and Pauli matrices.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("states", parents=[common], help="list the four standard Jones states")
    p.set_defaults(func=cmd_states)

    p = sub.add_parser("verify", parents=[common], help="check the Pauli algebra and projector invariants")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reproduce", parents=[common], help="re-run the worked cases")
    p.add_argument("--case", default="all", choices=["1", "2", "3", "all"])
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("sweep", parents=[common], help="grid search for Pauli multiples")
    p.add_argument("--config", help="sweep config file (default: bundled grid)")
    p.add_argument("--workers", type=int, default=1, help="worker processes")
    p.add_argument("--summary-only", action="store_true", help="text mode: omit the match list")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("field", parents=[common], help="real field of a standard state")
    p.add_argument("state", type=_state, help="LinearX, LinearY, CircularRight or CircularLeft")
    p.add_argument("--phase", type=float, default=0.0, help="propagation phase kz - wt in radians")
    p.set_defaults(func=cmd_field)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code not in (0, None) else EXIT_OK
    for name, default in (("json", False), ("tol", None), ("strict", False)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        doc, text, code = args.func(args)
    except (ConfigError, SweepError, ValueError) as exc:
        print(f"jonespauli: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(dumps_json(doc) if args.json else text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())

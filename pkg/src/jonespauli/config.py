"""Reader for sweep config files.

Format: UTF-8 text, one ``key = value, value, ...`` per line, ``#`` starts a
comment line. Recognised keys::

    amplitudes     = 0, 1, -1
    phases_deg     = 0, 90, 180, 270     # or phases_rad, never both
    combinators    = Commutator, Anticommutator, Difference
    constructions  = PairDyads, ProjectorDyads
    targets        = SigmaX, SigmaY, SigmaZ, Identity
    tol            = 1e-9
"""
from __future__ import annotations

import math
from importlib import resources
from pathlib import Path

from .sweep import SweepConfig, SweepError

_LISTS = ("amplitudes", "phases_deg", "phases_rad", "combinators", "constructions", "targets")
_KEYS = _LISTS + ("tol",)


class ConfigError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = "<config>"):
        self.line = line
        self.source = source
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


def _number(tok: str, key: str, lineno: int, source: str) -> float:
    try:
        x = float(tok)
    except ValueError:
        raise ConfigError(f"{key}: {tok!r} is not a number", lineno, source) from None
    if not math.isfinite(x):
        raise ConfigError(f"{key}: {tok!r} is not finite", lineno, source)
    return x


def parse_config(text: str, source: str = "<config>") -> SweepConfig:
    raw: dict[str, tuple[list[str], int]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError(f"expected 'key = values', got {stripped!r}", lineno, source)
        key, _, value = stripped.partition("=")
        key = key.strip()
        if key not in _KEYS:
            raise ConfigError(f"unknown key {key!r}; expected one of {list(_KEYS)}", lineno, source)
        if key in raw:
            raise ConfigError(f"duplicate key {key!r} (first set on line {raw[key][1]})", lineno, source)
        items = [tok.strip() for tok in value.split(",")]
        items = [tok for tok in items if tok]
        if not items:
            raise ConfigError(f"{key} must not be empty", lineno, source)
        raw[key] = (items, lineno)

    if "phases_deg" in raw and "phases_rad" in raw:
        raise ConfigError("give phases_deg or phases_rad, not both", raw["phases_rad"][1], source)

    kwargs = {}
    if "amplitudes" in raw:
        items, ln = raw["amplitudes"]
        kwargs["amplitudes"] = tuple(_number(t, "amplitudes", ln, source) for t in items)
    if "phases_deg" in raw:
        items, ln = raw["phases_deg"]
        kwargs["phases"] = tuple(math.radians(_number(t, "phases_deg", ln, source)) for t in items)
    if "phases_rad" in raw:
        items, ln = raw["phases_rad"]
        kwargs["phases"] = tuple(_number(t, "phases_rad", ln, source) for t in items)
    for key in ("combinators", "constructions", "targets"):
        if key in raw:
            kwargs[key] = tuple(raw[key][0])
    if "tol" in raw:
        items, ln = raw["tol"]
        if len(items) != 1:
            raise ConfigError("tol takes a single value", ln, source)
        kwargs["tol"] = _number(items[0], "tol", ln, source)

    try:
        return SweepConfig(**kwargs)
    except SweepError as exc:
        # Point at the offending key when it can be identified.
        msg = str(exc)
        line = next((ln for k, (_, ln) in raw.items() if msg.startswith(k) or f" {k}" in msg), None)
        raise ConfigError(msg, line, source) from None


def load_config(path: str | Path) -> SweepConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ConfigError(f"cannot read config: {exc}", None, str(path)) from None
    return parse_config(text, source=str(path))


def default_config_text() -> str:
    return resources.files("jonespauli").joinpath("data/default_sweep.cfg").read_text(encoding="utf-8")


def default_config() -> SweepConfig:
    return parse_config(default_config_text(), source="default_sweep.cfg")

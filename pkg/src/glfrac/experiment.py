"""Noise-table and identification experiments driven by plain parameters or a config."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, DomainError, GLError, SingularSystemError
from .fode import FodeModel, simulate
from .gl_engine import MemoryConfig, differintegrate
from .ident import SCHEMES, IdentificationSpec, identify
from .io import model_from_doc
from .signals import NoiseSpec, SampledSignal, add, sample_count, uniform_noise, unit_step

TABLE_ORDERS = (1.5, 1.2, 0.9, 0.6, 0.3, -0.3, -0.6, -0.9, -1.2, -1.5)
TABLE_SEEDS = (1, 2, 3, 4, 5)


def noise_signal(e_max: float, seed: int, count: int, h: float) -> SampledSignal:
    """Uniform noise, or an all-zero signal when ``e_max == 0``."""
    if e_max == 0:
        return SampledSignal(h, np.zeros(count))
    return uniform_noise(NoiseSpec(e_max, seed, count), h)


def noise_table(
    e_max: float = 0.01,
    seeds=TABLE_SEEDS,
    orders=TABLE_ORDERS,
    duration: float = 10.0,
    dt: float = 1e-3,
    memory: float | None = None,
) -> np.ndarray:
    """``D^alpha e(duration)`` for each seed (rows) and order (columns)."""
    if e_max < 0:
        raise DomainError(f"e_max must be non-negative, got {e_max}")
    count = sample_count(duration, dt) + 1
    mem = None if memory is None else MemoryConfig(memory)
    out = np.empty((len(seeds), len(orders)))
    for i, s in enumerate(seeds):
        e = noise_signal(e_max, s, count, dt)
        for j, a in enumerate(orders):
            out[i, j] = differintegrate(e, a, count - 1, mem)
    return out


@dataclass
class ExperimentConfig:
    model: FodeModel
    duration: float = 10.0
    dt: float = 1e-3
    memory: float | None = None
    t0: float | None = None
    noise_e_max: float = 0.05
    seeds: list[int] = field(default_factory=lambda: list(range(1, 21)))
    schemes: list[str] = field(default_factory=lambda: list(SCHEMES))
    shifts: dict[str, list[int]] = field(default_factory=dict)

    def __post_init__(self):
        if self.memory is None:
            self.memory = self.duration
        if self.t0 is None:
            self.t0 = self.duration
        checks = [
            ("dt", self.dt > 0, "must be > 0"),
            ("duration", self.duration >= self.dt, "must be at least dt"),
            ("t0", 0 < self.t0 <= self.duration, "must satisfy 0 < t0 <= duration"),
            ("memory", 0 < self.memory <= self.duration, "must satisfy 0 < memory <= duration"),
            ("noise_e_max", self.noise_e_max >= 0, "must be >= 0"),
        ]
        for name, ok, msg in checks:
            if not ok:
                raise ConfigError(f"field '{name}': {msg}")
        for s in self.schemes:
            if s not in SCHEMES:
                raise ConfigError(f"field 'scheme': unknown scheme {s!r}")

    @classmethod
    def from_doc(cls, doc) -> "ExperimentConfig":
        if not isinstance(doc, dict):
            raise ConfigError("top level must be an object")
        known = {"model", "duration", "dt", "memory", "t0", "noise_e_max", "seeds", "scheme", "shifts"}
        for key in doc:
            if key not in known:
                raise ConfigError(f"field '{key}': unknown field")
        if "model" not in doc:
            raise ConfigError("field 'model': missing")
        kw = {"model": model_from_doc(doc["model"])}
        for name in ("duration", "dt", "memory", "t0", "noise_e_max"):
            if name in doc and doc[name] is not None:
                kw[name] = _number(doc[name], name)
        if "seeds" in doc:
            seeds = doc["seeds"]
            if not isinstance(seeds, list) or not all(
                isinstance(s, int) and not isinstance(s, bool) and 0 <= s < 2**64 for s in seeds
            ):
                raise ConfigError("field 'seeds': must be a list of unsigned 64-bit integers")
            kw["seeds"] = seeds
        scheme = doc.get("scheme", "both")
        if scheme == "both":
            kw["schemes"] = list(SCHEMES)
        elif isinstance(scheme, str):
            kw["schemes"] = [scheme]
        elif isinstance(scheme, list) and all(isinstance(s, str) for s in scheme):
            kw["schemes"] = scheme
        else:
            raise ConfigError("field 'scheme': expected 'original', 'transformed', 'both' or a list")
        shifts = doc.get("shifts")
        if shifts is not None:
            if isinstance(shifts, list):
                if len(kw["schemes"]) != 1:
                    raise ConfigError("field 'shifts': a bare list needs a single scheme")
                shifts = {kw["schemes"][0]: shifts}
            if not isinstance(shifts, dict) or not all(
                isinstance(v, list) and all(isinstance(m, int) for m in v) for v in shifts.values()
            ):
                raise ConfigError("field 'shifts': expected a list of integers per scheme")
            kw["shifts"] = shifts
        return cls(**kw)

    def to_doc(self) -> dict:
        return {
            "model": self.model.to_dict(),
            "duration": self.duration,
            "dt": self.dt,
            "memory": self.memory,
            "t0": self.t0,
            "noise_e_max": self.noise_e_max,
            "seeds": list(self.seeds),
            "scheme": list(self.schemes),
            "shifts": {s: list(v) for s, v in self.shifts.items()},
        }


def _number(x, name: str) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)) or not math.isfinite(x):
        raise ConfigError(f"field '{name}': must be a finite number")
    return float(x)


def _run(r, y, spec, truth) -> dict:
    try:
        res = identify(r, y, spec, truth)
    except SingularSystemError as exc:
        return {"status": "failed", "error": f"{exc.category}: {exc}"}
    return {"status": "ok", **res.to_dict(), "worst_error_percent": res.worst_error_percent}


def run_experiment(cfg: ExperimentConfig) -> dict:
    """Simulate the step response, then identify it clean and under each noise seed."""
    r = unit_step(cfg.duration, cfg.dt)
    mem = MemoryConfig(cfg.memory)
    c = simulate(cfg.model, r, mem)
    truth = cfg.model.coeffs
    k0 = c.index_of(cfg.t0)
    specs = {}
    for s in cfg.schemes:
        try:
            specs[s] = IdentificationSpec(cfg.model.orders, s, cfg.shifts.get(s), k0, mem)
        except GLError as exc:
            raise ConfigError(f"field 'shifts': {exc}") from None

    report = {
        "config": cfg.to_doc(),
        "shifts": {s: spec.shifts for s, spec in specs.items()},
        "clean": {s: _run(r, c, spec, truth) for s, spec in specs.items()},
        "noisy": {s: [] for s in specs},
    }
    if cfg.noise_e_max > 0:
        for seed in cfg.seeds:
            y = add(c, noise_signal(cfg.noise_e_max, seed, len(c), cfg.dt))
            for s, spec in specs.items():
                report["noisy"][s].append({"seed": seed, **_run(r, y, spec, truth)})

    summary = {}
    for s, runs in report["noisy"].items():
        worst = [run["worst_error_percent"] for run in runs if run["status"] == "ok"]
        summary[s] = {
            "runs": len(runs),
            "failed": len(runs) - len(worst),
            "median_worst_error_percent": float(np.median(worst)) if worst else None,
        }
    report["summary"] = summary
    return report

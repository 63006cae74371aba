"""Uniformly sampled signals, test inputs and reproducible bounded noise."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ShapeError

_MASK64 = (1 << 64) - 1
SPLITMIX_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def sample_count(duration: float, h: float) -> int:
    """Number of whole steps of size ``h`` in ``duration`` (floor, rounding-safe)."""
    q = duration / h
    n = math.floor(q)
    # 0.3 / 0.1 == 2.9999999999999996
    if q - n > 1.0 - 1e-9:
        n += 1
    return int(n)


@dataclass(frozen=True, eq=False)
class SampledSignal:
    """Samples ``values[k] = f(k * h)``; the signal is zero for ``t < 0``."""

    h: float
    values: np.ndarray

    def __post_init__(self):
        h = float(self.h)
        if not (h > 0.0 and math.isfinite(h)):
            raise DomainError(f"sampling interval must be positive, got {self.h!r}")
        vals = np.array(self.values, dtype=np.float64).reshape(-1)
        if vals.size < 1:
            raise DomainError("a signal needs at least one sample")
        vals.setflags(write=False)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return self.values.size

    @property
    def times(self) -> np.ndarray:
        return np.arange(self.values.size) * self.h

    @property
    def duration(self) -> float:
        return (self.values.size - 1) * self.h

    def index_of(self, t: float) -> int:
        """Sample index of time ``t`` (floor, rounding-safe)."""
        return sample_count(t, self.h)

    def scaled(self, factor: float) -> "SampledSignal":
        return SampledSignal(self.h, factor * self.values)


@dataclass(frozen=True)
class NoiseSpec:
    e_max: float
    seed: int
    count: int

    def __post_init__(self):
        if not self.e_max > 0:
            raise DomainError(f"e_max must be positive, got {self.e_max!r}")
        if self.count < 1:
            raise DomainError(f"count must be at least 1, got {self.count!r}")
        if not 0 <= int(self.seed) <= _MASK64:
            raise DomainError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")


def unit_step(duration: float, h: float) -> SampledSignal:
    if not (h > 0 and duration >= h):
        raise DomainError(f"need duration >= h > 0, got duration={duration}, h={h}")
    return SampledSignal(h, np.ones(sample_count(duration, h) + 1))


def ramp(duration: float, h: float) -> SampledSignal:
    """``f(t) = t`` sampled on ``[0, duration]``."""
    if not (h > 0 and duration >= h):
        raise DomainError(f"need duration >= h > 0, got duration={duration}, h={h}")
    return SampledSignal(h, np.arange(sample_count(duration, h) + 1) * h)


def splitmix64(seed: int, count: int) -> np.ndarray:
    """First ``count`` SplitMix64 outputs for ``seed`` as ``uint64``.

    The generator state after ``k`` steps is ``seed + k * GAMMA (mod 2**64)``,
    so the whole stream is computed without a Python loop.
    """
    steps = np.arange(1, count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(int(seed) & _MASK64) + steps * np.uint64(SPLITMIX_GAMMA)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    return z ^ (z >> np.uint64(31))


def uniform_noise(spec: NoiseSpec, h: float = 1e-3) -> SampledSignal:
    """Bounded uniform noise in ``[-e_max, e_max]`` drawn from SplitMix64."""
    u = splitmix64(spec.seed, spec.count).astype(np.float64) / 2.0**64
    return SampledSignal(h, (2.0 * u - 1.0) * spec.e_max)


def add(a: SampledSignal, b: SampledSignal) -> SampledSignal:
    if a.h != b.h or len(a) != len(b):
        raise ShapeError(
            f"cannot add signals on different grids: (h={a.h}, n={len(a)}) vs (h={b.h}, n={len(b)})"
        )
    return SampledSignal(a.h, a.values + b.values)

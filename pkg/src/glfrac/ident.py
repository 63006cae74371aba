"""Coefficient identification for FODEs with known orders.

One equation is built per integration shift ``m``: the model equation is
differintegrated at order ``-m`` on both sides and evaluated at a single time
``t0``. With ``q`` unknown coefficients, ``q`` distinct shifts give a square
system. The *original* scheme uses shifts ``0, 1, 2, ...`` and therefore
differentiates the measured output; the *transformed* scheme starts at the
smallest shift that turns every order negative, so only integrations of the
(noisy) measurement are ever taken.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, ShapeError, SingularSystemError
from .fode import min_integrating_shift
from .gl_engine import MemoryConfig, differintegrate
from .signals import SampledSignal

SCHEMES = ("original", "transformed")


def default_shifts(orders, scheme: str) -> list[int]:
    start = 0 if scheme == "original" else min_integrating_shift(orders)
    return list(range(start, start + len(orders)))


@dataclass
class IdentificationSpec:
    orders: list[float]
    scheme: str = "original"
    shifts: list[int] | None = None
    t0_index: int | None = None  # None: last sample
    mem: MemoryConfig | None = None

    def __post_init__(self):
        self.orders = [float(a) for a in self.orders]
        if not self.orders:
            raise DomainError("need at least one known order")
        if self.scheme not in SCHEMES:
            raise DomainError(f"scheme must be one of {SCHEMES}, got {self.scheme!r}")
        if self.shifts is None:
            self.shifts = default_shifts(self.orders, self.scheme)
        self.shifts = [int(m) for m in self.shifts]
        if len(self.shifts) != len(self.orders):
            raise DomainError(
                f"{len(self.orders)} unknowns need {len(self.orders)} shifts, got {len(self.shifts)}"
            )
        if any(b <= a for a, b in zip(self.shifts, self.shifts[1:])):
            raise DomainError(f"shifts must be strictly increasing, got {self.shifts}")
        if self.scheme == "original" and self.shifts[0] != 0:
            raise DomainError("the original scheme starts at shift 0")
        if self.scheme == "transformed":
            n = min_integrating_shift(self.orders)
            if self.shifts[0] < n:
                raise DomainError(
                    f"the transformed scheme needs shifts >= {n} for orders {self.orders}"
                )


@dataclass
class IdentificationResult:
    estimates: np.ndarray
    condition_indicator: float
    true_values: np.ndarray | None = None
    relative_errors_percent: np.ndarray | None = field(default=None)

    def __post_init__(self):
        if self.true_values is not None:
            self.true_values = np.asarray(self.true_values, dtype=np.float64)
            if self.true_values.shape != self.estimates.shape:
                raise ShapeError("truth and estimates differ in length")
            self.relative_errors_percent = (
                100.0 * np.abs(self.estimates - self.true_values) / np.abs(self.true_values)
            )

    @property
    def worst_error_percent(self) -> float | None:
        if self.relative_errors_percent is None:
            return None
        return float(np.max(self.relative_errors_percent))

    def to_dict(self) -> dict:
        doc = {
            "estimates": [float(x) for x in self.estimates],
            "condition_indicator": float(self.condition_indicator),
        }
        if self.true_values is not None:
            doc["true_values"] = [float(x) for x in self.true_values]
            doc["relative_errors_percent"] = [float(x) for x in self.relative_errors_percent]
        return doc


def build_equations(
    r: SampledSignal, y: SampledSignal, spec: IdentificationSpec
) -> tuple[np.ndarray, np.ndarray]:
    """Rows ``A[p, i] = D^{alpha_i - m_p} y(t0)`` and ``v[p] = D^{-m_p} r(t0)``."""
    if r.h != y.h or len(r) != len(y):
        raise ShapeError("input and output must share the same sampling grid")
    k = len(y) - 1 if spec.t0_index is None else spec.t0_index
    q = len(spec.orders)
    A = np.empty((q, q))
    v = np.empty(q)
    for p, m in enumerate(spec.shifts):
        for i, a in enumerate(spec.orders):
            order = a - m
            if spec.scheme == "transformed" and not order < 0:
                raise DomainError(f"transformed scheme produced non-negative order {order}")
            A[p, i] = differintegrate(y, order, k, spec.mem)
        v[p] = differintegrate(r, -m, k, spec.mem)
    return A, v


def solve_linear(A, v) -> tuple[np.ndarray, float]:
    """Solve ``A x = v`` by Gaussian elimination with partial pivoting.

    Returns ``x`` and the ratio of the largest to the smallest pivot magnitude.
    Raises :class:`SingularSystemError` when a pivot falls below
    ``1e-12 * max|A|``.
    """
    M = np.array(A, dtype=np.float64)
    x = np.array(v, dtype=np.float64).reshape(-1)
    n = x.size
    if M.shape != (n, n):
        raise ShapeError(f"need a square matrix matching |v| = {n}, got {M.shape}")
    scale = np.max(np.abs(M)) if M.size else 0.0
    if not scale > 0:
        raise SingularSystemError("matrix is zero")
    pivots = np.empty(n)
    for c in range(n):
        p = c + int(np.argmax(np.abs(M[c:, c])))
        if abs(M[p, c]) < 1e-12 * scale:
            raise SingularSystemError(f"pivot {M[p, c]:.3e} in column {c} below tolerance")
        if p != c:
            M[[c, p]] = M[[p, c]]
            x[[c, p]] = x[[p, c]]
        pivots[c] = M[c, c]
        f = M[c + 1 :, c] / M[c, c]
        M[c + 1 :, c:] -= np.outer(f, M[c, c:])
        x[c + 1 :] -= f * x[c]
    for c in range(n - 1, -1, -1):
        x[c] = (x[c] - np.dot(M[c, c + 1 :], x[c + 1 :])) / M[c, c]
    mags = np.abs(pivots)
    return x, float(mags.max() / mags.min())


def identify(
    r: SampledSignal,
    y: SampledSignal,
    spec: IdentificationSpec,
    truth=None,
) -> IdentificationResult:
    """Estimate the coefficients of ``spec.orders`` from input ``r`` and measurement ``y``."""
    A, v = build_equations(r, y, spec)
    x, cond = solve_linear(A, v)
    return IdentificationResult(x, cond, truth)

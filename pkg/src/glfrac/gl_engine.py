"""Grunwald-Letnikov coefficients, weights and the discrete differintegral.

The differintegral of order ``alpha`` of a sampled signal at sample ``k`` is

    D^alpha f(k h) ~= sum_{j=0}^{J} Phi_j(alpha) f((k - j) h),
    Phi_j(alpha) = h^(-alpha) b_j,   J = min(k, floor(L / h)),

with ``b_0 = 1`` and ``b_j = (1 - (1 + alpha) / j) b_{j-1}``. Negative orders
integrate, positive orders differentiate, and order zero is the identity.
Samples before ``t = 0`` are taken as zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import BoundsError, DomainError, RangeGuardError, ResourceError
from .signals import SampledSignal, sample_count

MAX_ORDER = 64.0
DEFAULT_MAX_TERMS = 10_000_000


def check_order(alpha: float) -> float:
    """Validate a differintegral order and return it as a float."""
    alpha = float(alpha)
    if not math.isfinite(alpha):
        raise DomainError(f"order must be finite, got {alpha!r}")
    if abs(alpha) > MAX_ORDER:
        raise RangeGuardError(f"|order| must not exceed {MAX_ORDER:g}, got {alpha!r}")
    return alpha


def _scale(alpha: float, h: float) -> float:
    s = h ** (-alpha)
    if not (math.isfinite(s) and s > 0.0):
        raise RangeGuardError(f"h**(-alpha) leaves binary64 range for alpha={alpha}, h={h}")
    return s


@lru_cache(maxsize=256)
def _coefficients(alpha: float, n: int) -> np.ndarray:
    j = np.arange(1, n + 1, dtype=np.float64)
    b = np.empty(n + 1)
    b[0] = 1.0
    # cumprod multiplies left to right, i.e. it is exactly the recurrence
    np.cumprod((j - 1.0 - alpha) / j, out=b[1:])
    b.setflags(write=False)
    return b


@dataclass(frozen=True, eq=False)
class GLWeightTable:
    """Coefficients ``b_0..b_N`` for one order; weights need the step ``h``."""

    alpha: float
    b: np.ndarray
    h: float | None = None

    @property
    def N(self) -> int:
        return self.b.size - 1

    @property
    def phi(self) -> np.ndarray:
        """Weights ``Phi_j(alpha) = h**(-alpha) * b_j``."""
        if self.h is None:
            raise DomainError("this table was built without a sampling interval")
        return _scale(self.alpha, self.h) * self.b


def gl_coefficients(
    alpha: float, n: int, h: float | None = None, *, max_terms: int = DEFAULT_MAX_TERMS
) -> GLWeightTable:
    """Return the table of Grunwald-Letnikov coefficients ``b_0..b_n``.

    Parameters
    ----------
    alpha : float
        Order of the differintegral.
    n : int
        Horizon; the table holds ``n + 1`` coefficients.
    h : float, optional
        Sampling interval, needed only to read the weights ``table.phi``.
    max_terms : int
        Cap on ``n``; larger requests raise :class:`ResourceError`.

    Examples
    --------
    >>> gl_coefficients(0.5, 3).b.tolist()
    [1.0, -0.5, -0.125, -0.0625]
    """
    alpha = check_order(alpha)
    n = int(n)
    if n < 0:
        raise DomainError(f"horizon must be non-negative, got {n}")
    if n > max_terms:
        raise ResourceError(f"horizon {n} exceeds the cap of {max_terms} terms")
    if h is not None:
        h = float(h)
        if not h > 0:
            raise DomainError(f"sampling interval must be positive, got {h!r}")
    return GLWeightTable(alpha, _coefficients(alpha, n), h)


def gl_weights(alpha: float, n: int, h: float) -> np.ndarray:
    """Weights ``Phi_0..Phi_n`` for order ``alpha`` and step ``h``."""
    return gl_coefficients(alpha, n, h).phi


def phi(n: int, alpha: float, h: float) -> float:
    """Grunwald-Letnikov function of degree ``n``: ``h**(-alpha) * b_n``.

    Evaluated by the multiplicative recurrence
    ``Phi_0 = h**(-alpha)``, ``Phi_{j+1} = Phi_j (j - alpha) / (j + 1)``.
    """
    h = float(h)
    if not 0.0 < h < 1.0:
        raise DomainError(f"h must lie in (0, 1), got {h!r}")
    n = int(n)
    if n < 0:
        raise DomainError(f"degree must be non-negative, got {n}")
    alpha = check_order(alpha)
    terms = np.empty(n + 1)
    terms[0] = _scale(alpha, h)
    j = np.arange(n, dtype=np.float64)
    terms[1:] = (j - alpha) / (j + 1.0)
    return float(np.cumprod(terms)[-1])


@dataclass(frozen=True)
class MemoryConfig:
    """Length of memory ``L`` in seconds; the sum keeps ``floor(L / h)`` past terms."""

    L: float

    def __post_init__(self):
        if not (self.L > 0 and math.isfinite(self.L)):
            raise DomainError(f"memory length must be positive, got {self.L!r}")

    def horizon(self, h: float) -> int:
        n = sample_count(self.L, h)
        if n < 1:
            raise DomainError(f"memory length {self.L} is shorter than one step h={h}")
        return n


def _horizon(f: SampledSignal, mem: MemoryConfig | None) -> int:
    full = len(f) - 1
    if mem is None:
        return full
    return min(full, mem.horizon(f.h))


def differintegrate(
    f: SampledSignal, alpha: float, t_index: int, mem: MemoryConfig | None = None
) -> float:
    """Discrete differintegral of order ``alpha`` of ``f`` at sample ``t_index``.

    ``mem=None`` uses the whole record as memory.
    """
    alpha = check_order(alpha)
    k = int(t_index)
    if not 0 <= k < len(f):
        raise BoundsError(f"t_index {t_index} outside [0, {len(f) - 1}]")
    J = min(k, _horizon(f, mem))
    w = gl_weights(alpha, J, f.h)
    return float(np.dot(w, f.values[k - J : k + 1][::-1]))


def differintegrate_series(
    f: SampledSignal, alpha: float, mem: MemoryConfig | None = None
) -> SampledSignal:
    """Differintegral of order ``alpha`` at every sample of ``f``."""
    alpha = check_order(alpha)
    w = gl_weights(alpha, _horizon(f, mem), f.h)
    return SampledSignal(f.h, np.convolve(f.values, w)[: len(f)])

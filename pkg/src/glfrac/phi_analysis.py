"""Shape of the Grunwald-Letnikov function ``Phi_n(alpha) = h**(-alpha) b_n``.

For negative orders write ``mu = -alpha``. Then ``Phi_n(-mu)`` rises from zero,
peaks where ``psi(n, mu) = gamma`` with ``gamma = -ln h``, and decays to zero
again. At ``alpha = -1`` every degree gives ``Phi_n(-1) = h``; between ``-1``
and ``0`` the weights shrink with ``n`` and never exceed ``eta = e**-1 / gamma``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .gl_engine import check_order, phi


@dataclass(frozen=True)
class PhiContext:
    h: float

    def __post_init__(self):
        if not 0.0 < self.h < 1.0:
            raise DomainError(f"h must lie in (0, 1), got {self.h!r}")

    @property
    def gamma(self) -> float:
        return -math.log(self.h)

    @property
    def eta(self) -> float:
        return math.exp(-1.0) / self.gamma


@dataclass(frozen=True)
class PhiExtremum:
    n: int
    mu_max: float
    phi_at_max: float
    am_gm_bound: float

    @property
    def alpha_max(self) -> float:
        return -self.mu_max


@dataclass(frozen=True, eq=False)
class PhiCurve:
    n_values: list[int]
    alpha_grid: np.ndarray
    values: np.ndarray  # values[i, j] = Phi_{n_values[i]}(alpha_grid[j])


def psi(n: int, mu: float) -> float:
    """``1/mu + 1/(1 + mu) + ... + 1/(n - 1 + mu)``."""
    if not mu > 0:
        raise DomainError(f"mu must be positive, got {mu!r}")
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n!r}")
    return math.fsum(1.0 / (np.arange(n) + mu))


def eta(ctx: PhiContext) -> float:
    return ctx.eta


def am_gm_bound(n: int, mu: float, h: float) -> float:
    """Upper bound ``h**mu / n! * (mu + (n - 1) / 2)**n`` on ``Phi_n(-mu)``.

    Evaluated in log space; returns ``inf`` when the bound itself overflows.
    """
    log_b = mu * math.log(h) - math.lgamma(n + 1) + n * math.log(mu + (n - 1) / 2.0)
    try:
        return math.exp(log_b)
    except OverflowError:
        return math.inf


def find_mu_max(n: int, ctx: PhiContext, tol: float = 1e-10) -> PhiExtremum:
    """Locate the peak of ``Phi_n(-mu)`` over ``mu > 0`` by bisection.

    ``psi(n, .)`` decreases strictly from +inf to 0, so ``psi(n, mu) = gamma``
    has exactly one positive root.
    """
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n!r}")
    g = ctx.gamma
    lo, hi = 1e-12, 1.0
    while psi(n, hi) >= g:
        lo, hi = hi, 2.0 * hi
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if psi(n, mid) > g:
            lo = mid
        else:
            hi = mid
    mu = 0.5 * (lo + hi)
    return PhiExtremum(n, mu, phi(n, -mu, ctx.h), am_gm_bound(n, mu, ctx.h))


def crossover_check(n_max: int, ctx: PhiContext) -> float:
    """Largest ``|Phi_n(-1) - h|`` over ``n = 1..n_max``."""
    if n_max < 1:
        raise DomainError(f"n_max must be at least 1, got {n_max!r}")
    rows = phi_rows(range(1, n_max + 1), np.array([-1.0]), ctx.h)
    return float(np.max(np.abs(rows[:, 0] - ctx.h)))


def phi_rows(n_values, alpha_grid: np.ndarray, h: float) -> np.ndarray:
    """``Phi_n(alpha)`` for every requested ``n`` over an order grid.

    Runs the recurrence once up to ``max(n_values)`` and keeps the rows asked for.
    """
    ns = [int(n) for n in n_values]
    if any(n < 0 for n in ns):
        raise DomainError("degrees must be non-negative")
    alphas = np.asarray(alpha_grid, dtype=np.float64)
    for a in (alphas.min(), alphas.max()):
        check_order(a)
    wanted: dict[int, list[int]] = {}
    for i, n in enumerate(ns):
        wanted.setdefault(n, []).append(i)
    out = np.empty((len(ns), alphas.size))
    row = h ** (-alphas)
    for j in range(max(ns) + 1):
        if j:
            row = row * (((j - 1) - alphas) / j)
        for i in wanted.get(j, ()):
            out[i] = row
    return out


def alpha_grid(alpha_min: float, alpha_max: float, step: float) -> np.ndarray:
    if not alpha_min < alpha_max:
        raise DomainError(f"need alpha_min < alpha_max, got {alpha_min} and {alpha_max}")
    if not step > 0:
        raise DomainError(f"step must be positive, got {step!r}")
    count = int(math.floor((alpha_max - alpha_min) / step + 1e-9)) + 1
    return alpha_min + step * np.arange(count)


def sample_phi_curve(
    n_values, alpha_min: float, alpha_max: float, step: float, ctx: PhiContext
) -> PhiCurve:
    """Tabulate ``Phi_n`` on a uniform order grid for each degree in ``n_values``."""
    ns = [int(n) for n in n_values]
    if not ns:
        raise DomainError("need at least one degree n")
    grid = alpha_grid(alpha_min, alpha_max, step)
    return PhiCurve(ns, grid, phi_rows(ns, grid, ctx.h))


def phi_sign(n: int, alpha: float) -> int:
    """Sign of ``Phi_n(alpha)``, i.e. of ``(-alpha)(1 - alpha)...(n - 1 - alpha)``."""
    if n == 0:
        return 1
    if alpha == int(alpha) and 0 <= alpha <= n - 1:
        return 0
    negatives = min(n, max(0, math.ceil(alpha)))
    return -1 if negatives % 2 else 1


# default plotting domains for negative and positive orders
NEGATIVE_RANGE = (-12.0, 0.0)
POSITIVE_RANGE = (0.0, 3.0)
DEFAULT_STEP = 0.01

"""Fractional-order differential equations ``sum_i a_i D^{alpha_i} c(t) = r(t)``.

Simulation isolates the ``j = 0`` term of every Grunwald-Letnikov sum and solves
for the newest output sample, so the simulated output satisfies the discrete
equation exactly (up to rounding) when fed back through :mod:`glfrac.gl_engine`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SingularModelError
from .gl_engine import MemoryConfig, check_order, gl_weights
from .signals import SampledSignal


@dataclass(frozen=True)
class FodeTerm:
    coeff: float
    order: float

    def __post_init__(self):
        if not math.isfinite(self.coeff):
            raise DomainError(f"coefficient must be finite, got {self.coeff!r}")
        object.__setattr__(self, "coeff", float(self.coeff))
        object.__setattr__(self, "order", check_order(self.order))


class FodeModel:
    """Terms with distinct orders, highest order first.

    Terms sharing an order are merged by summing their coefficients.

    >>> FodeModel([(1.0, 0.0), (0.8, 2.23), (0.5, 0.88)]).orders
    [2.23, 0.88, 0.0]
    """

    def __init__(self, terms):
        merged: dict[float, float] = {}
        for t in terms:
            t = t if isinstance(t, FodeTerm) else FodeTerm(*t)
            merged[t.order] = merged.get(t.order, 0.0) + t.coeff
        if not merged:
            raise DomainError("a model needs at least one term")
        self.terms = tuple(FodeTerm(c, o) for o, c in sorted(merged.items(), reverse=True))
        if self.terms[0].coeff == 0.0:
            raise DomainError("the highest-order coefficient must be nonzero")

    @property
    def orders(self) -> list[float]:
        return [t.order for t in self.terms]

    @property
    def coeffs(self) -> list[float]:
        return [t.coeff for t in self.terms]

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return isinstance(other, FodeModel) and self.terms == other.terms

    def __repr__(self):
        inner = ", ".join(f"({t.coeff!r}, {t.order!r})" for t in self.terms)
        return f"FodeModel([{inner}])"

    def to_dict(self) -> dict:
        return {"terms": [{"coeff": t.coeff, "order": t.order} for t in self.terms]}

    @classmethod
    def from_dict(cls, doc: dict) -> "FodeModel":
        return cls((t["coeff"], t["order"]) for t in doc["terms"])


def combined_weights(model: FodeModel, n: int, h: float) -> np.ndarray:
    """``sum_i a_i Phi_j(alpha_i)`` for ``j = 0..n``."""
    w = np.zeros(n + 1)
    for t in model.terms:
        w += t.coeff * gl_weights(t.order, n, h)
    return w


def simulate(
    model: FodeModel, r: SampledSignal, mem: MemoryConfig | None = None
) -> SampledSignal:
    """Response ``c`` of the model to input ``r``, starting from rest.

    ``mem=None`` keeps the whole record in memory.
    """
    K = len(r)
    N = K - 1 if mem is None else min(K - 1, mem.horizon(r.h))
    w = combined_weights(model, N, r.h)
    w0 = w[0]
    if not abs(w0) >= 1e-300:
        raise SingularModelError(f"leading weight sum {w0!r} is zero; the step cannot be solved")
    tail = w[1:]
    rv = r.values
    c = np.zeros(K)
    # c_rev holds c in reverse time so that the history sum is a contiguous dot product
    c_rev = np.zeros(K)
    for k in range(K):
        J = min(k, N)
        hist = np.dot(tail[:J], c_rev[K - k : K - k + J]) if J else 0.0
        c[k] = (rv[k] - hist) / w0
        c_rev[K - 1 - k] = c[k]
    return SampledSignal(r.h, c)


def residual(model: FodeModel, c: SampledSignal, mem: MemoryConfig | None = None) -> np.ndarray:
    """Left-hand side ``sum_i a_i D^{alpha_i} c`` at every sample."""
    N = len(c) - 1 if mem is None else min(len(c) - 1, mem.horizon(c.h))
    return np.convolve(c.values, combined_weights(model, N, c.h))[: len(c)]


def shift_model(model: FodeModel, n: int) -> tuple[FodeModel, float]:
    """Lower every order by ``n``; the input must then be differintegrated at ``-n``."""
    if n < 0:
        raise DomainError(f"shift must be non-negative, got {n}")
    shifted = FodeModel((t.coeff, t.order - n) for t in model.terms)
    return shifted, -float(n)


def min_integrating_shift(orders) -> int:
    """Smallest ``n >= 0`` that makes every order minus ``n`` strictly negative."""
    if isinstance(orders, FodeModel):
        orders = orders.orders
    top = max(orders)
    return 0 if top < 0 else math.floor(top) + 1

"""Numerical checks of the shape properties of Phi_n(alpha).

Each check raises AssertionError on failure. They are shared between the unit
tests and the acceptance run.
"""

import math

import numpy as np

from glfrac.gl_engine import phi
from glfrac.phi_analysis import PhiContext, find_mu_max, phi_rows, psi

H = 1e-3
CTX = PhiContext(H)


def check_psi_monotone(rng=None):
    rng = rng or np.random.default_rng(11)
    for n in range(1, 101):
        mu1, mu2 = np.sort(rng.uniform(1e-3, 50.0, size=2))
        if mu1 == mu2:
            continue
        assert psi(n, mu1) > psi(n, mu2), (n, mu1, mu2)


def check_roots_and_ordering(n_max=1000):
    g = CTX.gamma
    ex1 = find_mu_max(1, CTX)
    assert abs(ex1.mu_max - 1 / g) <= 1e-10
    for n in range(1, n_max + 1):
        ex = find_mu_max(n, CTX)
        assert abs(psi(n, ex.mu_max) - g) <= 1e-8, n
        if n >= 2:
            assert ex.mu_max > 1 / g, n
            assert ex.phi_at_max < ex.am_gm_bound, n
        else:
            assert ex.phi_at_max <= ex.am_gm_bound * (1 + 1e-12)


def check_rise_then_fall(n_max=100):
    for n in range(1, n_max + 1):
        mu_m = find_mu_max(n, CTX).mu_max
        rising = np.linspace(1e-3, 0.98 * mu_m, 60)
        falling = np.linspace(1.02 * mu_m, 50.0, 200)
        up = [phi(n, -m, H) for m in rising]
        down = [phi(n, -m, H) for m in falling]
        assert np.all(np.diff(up) > 0), n
        assert np.all(np.diff(down) < 0), n


def check_vanishing_limits(n_max=100):
    for n in range(1, n_max + 1):
        assert phi(n, 0.0, H) == 0.0
        peak = find_mu_max(n, CTX).phi_at_max
        assert phi(n, -50.0, H) < peak * 1e-6, n


def check_monotone_in_n(n_max=5000):
    alphas = np.array([-0.5, -2.0, -4.0])
    rows = phi_rows(range(1, n_max + 2), alphas, H)
    d = np.diff(rows, axis=0)
    assert np.all(d[:, 0] < 0)
    assert np.all(d[:, 1] > 0)
    assert np.all(d[:, 2] > 0)


def check_eta_bound(n_max=10_000):
    grid = np.linspace(-0.999, -0.001, 200)
    rows = phi_rows(range(1, n_max + 1), grid, H)
    assert rows.max() <= CTX.eta * (1 + 1e-12)


def check_relative_change(n_max=2000):
    alphas = np.array([-3.7, -1.5, -0.5, 0.25, 1.7])
    rows = phi_rows(range(1, n_max + 2), alphas, H)
    n = np.arange(1, n_max + 1)[:, None]
    rel = np.abs(np.diff(rows, axis=0)) / np.abs(rows[:-1])
    formula = np.abs(-alphas - 1) / (n + 1)
    np.testing.assert_allclose(rel, formula, rtol=1e-9)
    assert np.all(np.diff(formula, axis=0) < 0)


ALL_CHECKS = [
    check_psi_monotone,
    check_roots_and_ordering,
    check_rise_then_fall,
    check_vanishing_limits,
    check_monotone_in_n,
    check_eta_bound,
    check_relative_change,
]

"""Recovering model coefficients from a noisy step response.

The original scheme differentiates the measured output, so noise swamps it.
Shifting every order below zero turns the equations into integrals and the
estimates survive.
"""

import numpy as np

from glfrac import FodeModel, IdentificationSpec, NoiseSpec, add, identify, simulate, uniform_noise, unit_step

orders, truth = [2.23, 0.88, 0.0], [0.8, 0.5, 1.0]
r = unit_step(10.0, 1e-3)
c = simulate(FodeModel(list(zip(truth, orders))), r)
y = add(c, uniform_noise(NoiseSpec(0.05, 7, len(c)), c.h))

for scheme in ("original", "transformed"):
    for label, data in (("clean", c), ("noisy", y)):
        res = identify(r, data, IdentificationSpec(orders, scheme), truth)
        print(f"{scheme:<12}{label:<6} a = {np.round(res.estimates, 4)}  worst error {res.worst_error_percent:.3g}%")

"""Grunwald-Letnikov weights and a half-derivative of a ramp.

The half-derivative of f(t) = t is 2 sqrt(t / pi). We compare the discrete
operator against it on two grids and watch the error halve with h.
"""

import math

import numpy as np

from glfrac import SampledSignal, differintegrate, gl_coefficients

table = gl_coefficients(0.5, 5, h=0.01)
print("b_j  :", np.round(table.b, 6))
print("Phi_j:", np.round(table.phi, 4))

exact = 2 / math.sqrt(math.pi)
for h in (0.004, 0.002, 0.001):
    n = round(1 / h)
    f = SampledSignal(h, np.arange(n + 1) * h)
    approx = differintegrate(f, 0.5, n)
    print(f"h={h:<6} D^0.5 t at t=1: {approx:.6f}  error {abs(approx - exact):.2e}")

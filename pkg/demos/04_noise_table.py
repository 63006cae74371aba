"""Differentiating noise amplifies it; integrating it smooths it away.

Uniform noise of amplitude 0.01 is pushed through the GL operator at one
positive and several negative orders, evaluated at t = 10 s.
"""

import numpy as np

from glfrac.experiment import noise_table

orders = [1.5, -0.3, -0.6, -0.9, -1.2, -1.5]
tab = noise_table(0.01, [1, 2, 3, 4, 5], orders, duration=10.0, dt=1e-3)
print("seed " + "".join(f"{a:>12}" for a in orders))
for seed, row in zip(range(1, 6), tab):
    print(f"{seed:>4} " + "".join(f"{v:12.3e}" for v in row))
print("median |D^1.5 e| / median |D^-0.3 e|:", f"{np.median(abs(tab[:, 0])) / np.median(abs(tab[:, 1])):.3g}")

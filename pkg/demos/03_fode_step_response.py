"""Step response of 0.8 D^2.23 c + 0.5 D^0.88 c + c = 1(t)."""

import numpy as np

from glfrac import FodeModel, simulate, unit_step

model = FodeModel([(0.8, 2.23), (0.5, 0.88), (1.0, 0.0)])
r = unit_step(10.0, 1e-3)
c = simulate(model, r)

for t in (0.5, 1, 2, 4, 6, 8, 10):
    print(f"c({t:>4}) = {c.values[c.index_of(t)]: .4f}")
print(f"mean over the last 5 s: {np.mean(c.values[5000:]):.4f}")

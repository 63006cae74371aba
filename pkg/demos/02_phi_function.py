"""How a single weight Phi_n(alpha) behaves as a function of the order.

For negative orders each Phi_n rises and then falls, with its peak at the
root of psi_n(mu) = -ln h. Large n push the peak far into the integral side.
"""

from glfrac import PhiContext, crossover_check, find_mu_max, sample_phi_curve

ctx = PhiContext(1e-3)
print(f"gamma = {ctx.gamma:.6f}, eta = {ctx.eta:.6f}")

for n in (1, 2, 10, 100, 1000, 10_000):
    ex = find_mu_max(n, ctx)
    print(f"n={n:>6}: peak {ex.phi_at_max:.6g} at alpha = {ex.alpha_max:.4f} (AM-GM bound {ex.am_gm_bound:.3g})")

print("every weight equals h at alpha = -1:", crossover_check(10_000, ctx) == 0.0)

curve = sample_phi_curve([0, 1, 2], -3.0, 0.0, 0.5, ctx)
for a, col in zip(curve.alpha_grid, curve.values.T):
    print(f"alpha={a:5.1f}", "  ".join(f"{v:.3e}" for v in col))

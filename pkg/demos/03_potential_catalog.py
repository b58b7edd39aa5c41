#!/usr/bin/env python3
"""Tour of the potential catalog.

Prints the machine-readable listing, evaluates a few entries, spot-checks
the trig <-> hyperbolic continuation, and draws the zoo.
"""

import numpy as np

from sga import analytic_energy, catalog_listing, eval_V, isospectral_pairs, make_potential

listing = catalog_listing()
print(f"{len(listing)} catalog entries:\n")
for id, row in listing.items():
    print(f"  {id:12s} {row['mu_domain']:44s} E({','.join(row['energy_inputs'])})")

print("\nisospectral pairs:", isospectral_pairs())

morse = make_potential("morse", dict(alpha=1.0, A=3.0, B=1.0))
print("\nmorse well minimum: V(mu*) =", f"{np.min(eval_V(morse, np.linspace(-4, 6, 2001))):.4f}",
      " (analytic -(2A+alpha)^2/4 =", -(2 * 3 + 1) ** 2 / 4, ")")
print("morse E(lam) ladder:", [round(analytic_energy(morse, lam=7.9 - 2 * n), 3) for n in range(5)])

# continuation spot check: the trig entry equals the hyperbolic one under
# alpha -> i alpha evaluated by complex arithmetic
gpt_t = make_potential("gpt_trig", dict(alpha=1.0, delta=2.0, a_r=1.0, a_t=5.0))
mu = 0.9
z = 1j * mu
c1 = (1j) ** 2 / 32 * (8 * 6 - 4)
c2 = 2 * (1j) ** 2 / 8 * (1 - 5)
hyp_cont = c1 / np.sinh(z) ** 2 + c2 / (np.sinh(z) * np.tanh(z))
print(f"\ngpt_trig({mu}) = {eval_V(gpt_t, mu):.12f}   continued hyperbolic = "
      f"{hyp_cont.real:.12f} (+{abs(hyp_cont.imag):.1e} i)")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, axes = plt.subplots(2, 3, figsize=(11, 6))
    panels = [
        ("morse", dict(alpha=1, A=3, B=1), np.linspace(-3.5, 8, 400)),
        ("oscillator3d", dict(omega=1, lam=0), np.linspace(0.25, 6, 400)),
        ("coulomb3d", dict(Ze2=1, lam=0), np.linspace(0.15, 12, 400)),
        ("gpt", dict(alpha=1, delta=2, a_r=2, a_t=200), np.linspace(0.12, 10, 400)),
        ("eckart", dict(alpha=1, delta=2, a_t=98, lam=4), np.linspace(0.08, 8, 400)),
        ("rosen_morse", dict(alpha=1, delta=2, a_r=-98, a_t=98, lam=4), np.linspace(-6, 6, 400)),
    ]
    for ax, (id, params, mu) in zip(axes.ravel(), panels):
        V = eval_V(make_potential(id, params), mu)
        ax.plot(mu, np.real(V))
        ax.set_title(id, fontsize=9)
        ax.set_xlabel("mu", fontsize=8)
        lo = np.percentile(np.real(V), 2)
        ax.set_ylim(lo * 1.1 - 1, min(np.max(np.real(V)), abs(lo) * 0.8) + 1)
    fig.tight_layout()
    fig.savefig("demo03_catalog.png", dpi=130)
    print("\nsaved demo03_catalog.png")
except ImportError:
    print("\n(matplotlib not available; skipping the figure)")

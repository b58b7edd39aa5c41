#!/usr/bin/env python3
"""Mass profiles and the mass integral.

Builds the three closed-form profiles (full-line, half-line and bounded
mu-image) plus a tabulated one, prints mu tables with round-trip checks, and
saves a figure when matplotlib is available.
"""

import numpy as np

from sga import make_profile

profiles = {
    "constant": make_profile("constant"),
    "exponential (mu = e^x)": make_profile("exponential", [1.0], anchor=(0.0, 1.0)),
    "rational-arctan": make_profile("rational-arctan"),
}

# a tabulated profile sampled from a wobbly but positive mass
xs = np.linspace(-3, 3, 241)
profiles["tabulated"] = make_profile(
    "tabulated", anchor=(0.0, 0.0), table=(xs, (1 + 0.3 * np.sin(xs)) ** 2)
)

print("profile".ljust(26), "mu-image".ljust(26), "max|mu_inv(mu(x)) - x|")
for name, prof in profiles.items():
    lo, hi = prof.mu_image()
    x = np.linspace(-2, 2, 101)
    rt = np.max(np.abs(prof.mu_inverse(prof.mu(x)) - x))
    print(name.ljust(26), f"({lo:+.3f}, {hi:+.3f})".ljust(26), f"{rt:.2e}")

print("\nquadrature path vs closed form (exponential profile):")
prof = profiles["exponential (mu = e^x)"]
pts = np.linspace(-1.5, 1.5, 5)
for x, a, b in zip(pts, prof.mu(pts), prof.mu_quad(pts)):
    print(f"  x={x:+.2f}  mu={a:.12f}  quad={b:.12f}  diff={abs(a-b):.1e}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.5))
    x = np.linspace(-2.5, 2.5, 400)
    for name, prof in profiles.items():
        ax1.plot(x, prof.m(x), label=name)
        ax2.plot(x, prof.mu(x), label=name)
    ax1.set(xlabel="x", ylabel="m(x)", yscale="log", title="mass profiles")
    ax2.set(xlabel="x", ylabel="mu(x)", title="mass integrals")
    ax2.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig("demo01_profiles.png", dpi=130)
    print("\nsaved demo01_profiles.png")
except ImportError:
    print("\n(matplotlib not available; skipping the figure)")

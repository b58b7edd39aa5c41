import math

import numpy as np
import pytest

from sga.catalog import eval_V, make_potential
from sga.errors import SingularityError, ValidationError
from sga.profiles import make_profile
from sga.solver import (ORDERINGS, Grid, OrderingParams, build_hamiltonian, refine,
                        solve_spectrum)

BDD = ORDERINGS["bendaniel-duke"]

# Independent closed-form reference for the exponential-well entry with
# V = B^2 e^{-2 a x} - B (2A + a) e^{-a x} and kinetic -(1/2) d^2/dx^2:
# E_n = -(a^2/2) (beta0 - n)^2 with 2 beta0 + 1 = sqrt(2) (2A + a)/a.
def morse_levels(alpha, A, n_levels):
    beta0 = (math.sqrt(2.0) * (2 * A + alpha) / alpha - 1.0) / 2.0
    return np.array([-(alpha**2) * (beta0 - n) ** 2 / 2.0 for n in range(n_levels)])


# Frozen by the convergence study on (-6, 30): N=2000/4000/8000 two-grid
# extrapolations agree with the closed form to 1.6e-7 / 1.0e-8 / 6.4e-10.
MORSE_E0_FROZEN = -9.900126265457


def test_ordering_constraint():
    with pytest.raises(ValidationError):
        OrderingParams(0.0, 0.0, 0.0)
    o = OrderingParams(-0.25, -0.5, -0.25)
    assert o.as_tuple() == (-0.25, -0.5, -0.25)


def test_grid_properties():
    g = Grid(0.0, 1.0, 99)
    assert g.h == pytest.approx(0.01)
    assert g.nodes[0] == pytest.approx(0.01) and g.nodes[-1] == pytest.approx(0.99)
    assert g.links.size == 100
    with pytest.raises(ValidationError):
        Grid(0.0, 1.0, 4)


def test_constant_mass_collapses_to_half_laplacian(const_profile):
    g = Grid(0.0, math.pi, 64)
    H = build_hamiltonian(const_profile, lambda x: np.zeros_like(x), BDD, g)
    L = (np.diag(-2.0 * np.ones(64)) + np.diag(np.ones(63), 1) + np.diag(np.ones(63), -1)) / g.h**2
    assert np.max(np.abs(H - (-0.5 * L))) < 1e-14
    H2 = build_hamiltonian(const_profile, lambda x: np.zeros_like(x), ORDERINGS["symmetric"], g)
    H3 = build_hamiltonian(const_profile, lambda x: np.zeros_like(x), ORDERINGS["gora-williams"], g)
    assert np.array_equal(H, H2) and np.array_equal(H, H3)  # bitwise on constant mass


def test_exact_symmetry_for_random_orderings(rng):
    profs = [make_profile("exponential", [0.6]), make_profile("rational-arctan")]
    g = Grid(-1.0, 1.5, 40)
    for prof in profs:
        for _ in range(6):
            eta, eps = rng.uniform(-1.5, 1.0, 2)
            o = OrderingParams(eta, eps, -1.0 - eta - eps)
            H = build_hamiltonian(prof, lambda x: x**2, o, g)
            assert np.max(np.abs(H - H.T)) == 0.0


def test_box_spectrum(const_profile):
    rep = refine(const_profile, lambda x: np.zeros_like(x), BDD, Grid(0.0, math.pi, 200), 3)
    assert abs(rep.eigenvalues[0] - 0.5) < 1e-8
    assert np.max(np.abs(rep.eigenvalues - np.array([0.5, 2.0, 4.5]))) < 1e-6


def test_harmonic_spectrum_and_error_scaling(const_profile):
    V = lambda x: 0.5 * x**2
    r500 = refine(const_profile, V, BDD, Grid(-12.0, 12.0, 500), 5)
    r1000 = refine(const_profile, V, BDD, Grid(-12.0, 12.0, 1000), 5)
    assert np.max(np.abs(r1000.eigenvalues - (np.arange(5) + 0.5))) < 1e-7
    ratio = r500.convergence / r1000.convergence
    assert np.all((3.2 < ratio) & (ratio < 4.8))  # O(h^2): error estimate shrinks ~4x


def test_h2_convergence_slope(const_profile):
    # log-log slope of |E(h) - E_extrap| vs h is 2.0 +/- 0.1
    V = lambda x: 0.5 * x**2
    hs, errs = [], []
    ref = refine(const_profile, V, BDD, Grid(-10.0, 10.0, 2000), 1).eigenvalues[0]
    for N in (100, 200, 400, 800):
        g = Grid(-10.0, 10.0, N)
        H = build_hamiltonian(const_profile, V, BDD, g)
        E = solve_spectrum(H, 1).eigenvalues[0]
        hs.append(g.h)
        errs.append(abs(E - ref))
    slope = np.polyfit(np.log(hs), np.log(errs), 1)[0]
    assert abs(slope - 2.0) < 0.1


def test_morse_oracle_frozen_value(const_profile):
    m = make_potential("morse", dict(alpha=1.0, A=3.0, B=1.0))
    rep = refine(const_profile, lambda x: eval_V(m, x), BDD, Grid(-6.0, 30.0, 4000), 6,
                 bound_threshold=0.0)
    assert abs(rep.eigenvalues[0] - MORSE_E0_FROZEN) < 5e-8
    exact = morse_levels(1.0, 3.0, 5)
    assert np.max(np.abs(rep.eigenvalues[:5] - exact)) < 2e-7
    assert np.sum(rep.bound) == 5


def test_richardson_self_consistency(const_profile):
    # the N=4000 extrapolation and the one reusing the N=8000 direct solve
    # agree far below their own error estimates
    m = make_potential("morse", dict(alpha=1.0, A=3.0, B=1.0))
    V = lambda x: eval_V(m, x)
    r1 = refine(const_profile, V, BDD, Grid(-6.0, 30.0, 4000), 5, bound_threshold=0.0)
    r2 = refine(const_profile, V, BDD, Grid(-6.0, 30.0, 8000), 5, bound_threshold=0.0)
    assert np.max(np.abs(r1.eigenvalues - r2.eigenvalues)) < 1e-7


def test_variational_monotonicity(const_profile):
    # widening the box at fixed h never raises a level
    V = lambda x: 0.5 * x**2
    h = 0.04
    narrow = Grid(-8.0, 8.0, round(16 / h) - 1)
    wide = Grid(-10.0, 10.0, round(20 / h) - 1)
    assert narrow.h == pytest.approx(wide.h)
    en = solve_spectrum(build_hamiltonian(const_profile, V, BDD, narrow), 4).eigenvalues
    ew = solve_spectrum(build_hamiltonian(const_profile, V, BDD, wide), 4).eigenvalues
    assert np.all(ew <= en + 1e-11)


def test_solve_spectrum_dense_matches_banded(const_profile):
    g = Grid(-6.0, 6.0, 300)
    H = build_hamiltonian(const_profile, lambda x: 0.5 * x**2, BDD, g)
    rep = solve_spectrum(H, 4)
    assert np.max(np.abs(rep.eigenvalues - (np.arange(4) + 0.5))) < 2e-3
    # a generic dense symmetric matrix goes through the dense path
    A = H + 0.0
    A[0, -1] = A[-1, 0] = 1e-3
    rep2 = solve_spectrum(A, 4)
    assert rep2.eigenvalues.shape == (4,)


def test_complex_path_against_dense(rng):
    n = 240
    diag = rng.normal(size=n) + 1j * 0.05 * rng.normal(size=n) + 3.0
    off = rng.normal(size=n - 1)
    H = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
    rep = solve_spectrum(H, 5)
    dense = np.linalg.eigvals(H)
    dense = dense[np.argsort(dense.real)][:5]
    assert np.max(np.abs(np.sort_complex(rep.eigenvalues) - np.sort_complex(dense))) < 1e-10


def test_scarf2_reality_gate(const_profile):
    # a_r = 2 keeps the two quasi-parity towers incommensurate; exact tower
    # coincidences (a_r = 1 at delta = 2) split into conjugate pairs under
    # discretization and would trip the gate spuriously
    m = make_potential("scarf2", dict(alpha=1.0, delta=2.0, a_r=2.0, a_t=20.0))
    rep = refine(const_profile, lambda x: eval_V(m, x), BDD, Grid(-10.0, 10.0, 600), 4,
                 bound_threshold=0.0, is_complex=True)
    assert rep.max_imag < 1e-6 * np.max(np.abs(np.real(rep.eigenvalues))) + 1e-9
    assert "complex-eigenvalues" not in rep.flags


def test_singular_potential_rejected(const_profile):
    g = Grid(-1.0, 1.0, 99)  # node lands exactly on x = 0
    with np.errstate(divide="ignore"):
        with pytest.raises(SingularityError, match="truncate"):
            build_hamiltonian(const_profile, lambda x: 1.0 / x, BDD, g)


def test_k_validation(const_profile):
    g = Grid(0.0, 1.0, 20)
    H = build_hamiltonian(const_profile, lambda x: np.zeros_like(x), BDD, g)
    with pytest.raises(ValidationError):
        solve_spectrum(H, 21)
    with pytest.raises(ValidationError):
        refine(const_profile, lambda x: np.zeros_like(x), BDD, Grid(0.0, 1.0, 21), 2)


def test_report_json_shape(const_profile):
    rep = refine(const_profile, lambda x: 0.5 * x**2, BDD, Grid(-8.0, 8.0, 120), 3)
    doc = rep.to_json()
    assert doc["grid"]["N"] == 120
    assert len(doc["eigenvalues"]) == 3
    assert all(e >= 0 for e in doc["error_estimates"])

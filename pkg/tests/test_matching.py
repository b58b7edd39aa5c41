import math

import numpy as np
import pytest

from sga.errors import SingularityError, ValidationError
from sga.matching import (CASE_TAGS, SgaCase, YSolution, case_constant,
                          effective_correction, fg_functions, generating_function,
                          generating_function_general, nu_pair_from_rt, quantum_map,
                          solve_y)
from sga.profiles import make_profile

CASES = [
    SgaCase("A-exponential", q=0, delta=1.0, c0=8.0),
    SgaCase("A-quadratic", q=0, delta=2.0, r0=1.0, t0=-1.0),
    SgaCase("A-linear", q=0, delta=2.0, r0=1.0, t0=1.0),
    SgaCase("B-I", q=1, delta=2.0, c0=8.0),
    SgaCase("B-II", q=1, delta=2.0, r0=1.0, t0=1.0, p=1),
    SgaCase("B-II", q=1, delta=0.0, r0=1.0, t0=1.0, p=2),
]


def test_case_validation():
    with pytest.raises(ValidationError):
        SgaCase("A-exponential", q=0, c0=0.0)  # needs c0 != 0
    with pytest.raises(ValidationError):
        SgaCase("A-quadratic", q=0, r0=1.0, t0=1.0)  # needs r0 = -t0
    with pytest.raises(ValidationError):
        SgaCase("B-I", q=0, c0=1.0)  # q must be 1
    with pytest.raises(ValidationError):
        SgaCase("nope", q=0, c0=1.0)


def test_case_json_round_trip():
    c = SgaCase("B-II", q=1, delta=2.0, r0=1.5, t0=1.5, a_r=3.0, a_t=-1.0, a_c=8.0, p=2)
    assert SgaCase.from_json(c.to_json()) == c
    keys = list(c.to_json().keys())
    assert keys == ["q", "b", "delta", "r0", "t0", "c0", "a_r", "a_t", "a_c", "case_tag", "p"]


def test_affine_energy_coefficients():
    c = SgaCase("A-exponential", q=0, delta=1.0, c0=8.0, a_c=-1.0)
    assert c.c(0.0) == -1.0
    assert c.c(2.0) == pytest.approx(-17.0)
    assert c.r(5.0) == 0.0 and c.t(5.0) == 0.0


def test_fg_values():
    F, G = fg_functions(0, 1, 2.0, 1.0)
    assert (F, G) == pytest.approx((8.0, 0.0))
    F, G = fg_functions(1, 1, 0.0, 0.5)
    assert F == pytest.approx(64.0 / 9.0) and G == pytest.approx(64.0 / 9.0)
    F, _ = fg_functions(0, 1, 2.0, 1e9)  # y -> inf limit is delta^2
    assert F == pytest.approx(4.0, rel=1e-8)


def test_fg_poles():
    with pytest.raises(SingularityError):
        fg_functions(1, 1, 1.0, 1.0)  # q y^2 = sqrt(b)
    with pytest.raises(SingularityError):
        fg_functions(0, 1, 1.0, 0.0)  # y = 0 with delta != 0


def test_quantum_map_and_inverse():
    assert quantum_map(1, 1) == (4, 0)
    assert quantum_map(1, 0) == (1, 1)
    nu, nup = nu_pair_from_rt(9.0, 1.0)
    assert (nu, nup) == (2.0, 1.0)
    assert quantum_map(nu, nup) == pytest.approx((9.0, 1.0))
    with pytest.raises(ValidationError):
        nu_pair_from_rt(-1.0, 0.0)


def test_solve_y_alpha_values():
    y = solve_y(SgaCase("A-exponential", q=0, delta=1.0, c0=8.0))
    assert y.form == "exponential" and y.alpha == pytest.approx(1.0)
    y = solve_y(SgaCase("A-quadratic", q=0, delta=2.0, r0=1.0, t0=-1.0))
    assert y.form == "quadratic" and y.alpha == pytest.approx(1.0)
    assert y.y_of_mu(2.0) == pytest.approx(1.0)  # mu^2/4 at mu=2
    y = solve_y(SgaCase("B-II", q=1, delta=0.0, r0=1.0, t0=1.0, p=1))
    assert y.form == "tanh-p" and y.alpha == pytest.approx(2.0)
    assert y.y_of_mu(0.5) == pytest.approx(math.tanh(0.5))


def test_solve_y_variants():
    bi = SgaCase("B-I", q=1, delta=2.0, c0=8.0)
    y = solve_y(bi, "double-exponent")
    assert y.exponent_mult == 2.0 and y.alpha == pytest.approx(math.sqrt(0.25))
    y = solve_y(bi, "imaginary-offset")
    assert y.prefactor == 1j
    b2 = SgaCase("B-II", q=1, delta=2.0, r0=1.0, t0=1.0, p=1)
    y = solve_y(b2, "quarter-turn")
    # tanh(z + i pi/4) = tanh(2z) + i sech(2z) at z = alpha mu / 2
    val = y.y_of_mu(0.7)
    z = y.alpha * 0.7
    assert val == pytest.approx(math.tanh(z) + 1j / math.cosh(z))
    with pytest.raises(ValidationError):
        solve_y(bi, "no-such-variant")


@pytest.mark.parametrize("case", CASES, ids=[f"{c.case_tag}-p{c.p}" for c in CASES])
def test_generating_function_consistency(case):
    prof = make_profile("exponential", [0.5], anchor=(0.0, 0.5))
    x = np.linspace(0.2, 1.6, 30)
    y = solve_y(case)
    S = generating_function(case, y, prof, x)
    yj = y.jet_on(prof, x, 1)
    ode = np.abs(S - yj.deriv(1).values ** 2 / prof.m(x))
    assert np.max(ode) < 1e-9
    assert np.all(np.real(S) > 0)
    Sg = generating_function_general(case, y.y_of_mu(prof.mu(x)))
    assert np.max(np.abs(S - Sg)) < 1e-10


def test_generating_function_spot_values():
    prof = make_profile("constant")
    aexp = SgaCase("A-exponential", q=0, delta=1.0, c0=8.0)
    assert generating_function(aexp, solve_y(aexp), prof, np.array([0.0]))[0] == pytest.approx(1.0)
    # r0 (4 + delta^2) = 16 with delta = 2 -> alpha = 1, y = tanh(mu/2); S(y=0) = 16/16 * ... = 0.25
    b2 = SgaCase("B-II", q=1, delta=2.0, r0=2.0, t0=2.0, p=1)
    y = solve_y(b2)
    assert y.alpha == pytest.approx(1.0)
    assert generating_function(b2, y, prof, np.array([0.0]))[0] == pytest.approx(0.25)


def test_energy_derivative_identity():
    # 1/S == (r0 F + t0 G + c0/y^2)/8 with the affine coefficient slopes
    prof = make_profile("constant")
    for case in CASES:
        y = solve_y(case)
        x = np.linspace(0.3, 1.4, 11)
        yv = y.y_of_mu(prof.mu(x))
        F, G = fg_functions(case.q, case.b, case.delta, yv)
        lhs = 1.0 / generating_function(case, y, prof, x)
        rhs = (case.r0 * F + case.t0 * G + case.c0 / yv**2) / 8.0
        assert np.max(np.abs(lhs - rhs)) < 1e-10 * np.max(np.abs(lhs))


def test_effective_correction_constant_mass():
    prof = make_profile("constant")
    x = np.linspace(-1, 1, 9)
    for eta, eps in [(0.0, -1.0), (-0.5, 0.0), (0.7, -0.2)]:
        assert np.max(np.abs(effective_correction(prof, eta, eps, None, x, "U_eff"))) == 0.0
    # V-form for y = e^{-alpha x}: 3 a^2/8 - a^2/4 = a^2/8
    y = YSolution("exponential", 1.3)
    V = effective_correction(prof, 0.0, -1.0, y, x, "V_eff")
    assert np.max(np.abs(V - 1.3**2 / 8.0)) < 1e-13


def test_ordering_bracket_value():
    # (1 + 2 eta)^2 + 4 eps (1 + eta) at (0, -1) is -3
    prof = make_profile("exponential", [1.0])
    x = np.array([0.3])
    got = effective_correction(prof, 0.0, -1.0, YSolution("linear", 1.0), x, "V_eff")
    m = prof.m(x)[0]
    m1 = prof.m_jet(x, 1).deriv(1).values[0]
    m2 = prof.m_jet(x, 2).deriv(2).values[0]
    muj = prof.mu_jet(x, 3)
    p1, p2, p3 = (muj.deriv(k).values[0] for k in (1, 2, 3))
    expected = (3 / (8 * m)) * (p2 / p1) ** 2 - (1 / (4 * m)) * (p3 / p1) \
        + (m1**2 / (8 * m**3)) * (-3.0) - (-1.0) * m2 / (4 * m**2)
    assert got[0] == pytest.approx(expected, rel=1e-12)
    # the bracket itself, isolated by an (eta, eps) pair with equal eps
    other = effective_correction(prof, -1.0, -1.0, YSolution("linear", 1.0), x, "V_eff")
    bracket_diff = (got[0] - other[0]) / (m1**2 / (8 * m**3))
    assert bracket_diff == pytest.approx(-3.0 - 1.0, rel=1e-12)


def test_v_form_equals_u_form_plus_case_constant(rng):
    profs = [make_profile("constant"), make_profile("exponential", [0.7], anchor=(0, 2.0)),
             make_profile("rational-arctan")]
    ys = [YSolution("exponential", 1.3), YSolution("exponential", 0.8, exponent_mult=2.0),
          YSolution("exponential", 1.3, prefactor=1j), YSolution("quadratic", 2.0),
          YSolution("linear", 1.7), YSolution("tanh-p", 1.1, p=1),
          YSolution("tanh-p", 1.1, p=2), YSolution("tanh-p", 1.1, p=1, offset=0.25j * math.pi)]
    x = np.linspace(0.3, 1.2, 7)
    for prof in profs:
        mu = prof.mu(x)
        for eta, eps in [(0, -1), (-0.5, 0), (-1, 0), (0.3, -0.9)]:
            U = effective_correction(prof, eta, eps, None, x, "U_eff")
            for y in ys:
                V = effective_correction(prof, eta, eps, y, x, "V_eff")
                c = case_constant(y, mu=mu)
                assert np.max(np.abs(V - (U + c))) < 1e-9


def test_v_form_symmetric_under_eta_rho_swap():
    # eta <-> rho = -1 - eps - eta leaves the physical correction unchanged
    prof = make_profile("rational-arctan")
    x = np.linspace(-0.5, 0.5, 7)
    y = YSolution("tanh-p", 1.0, p=1)
    eta, eps = 0.3, -0.8
    rho = -1.0 - eps - eta
    a = effective_correction(prof, eta, eps, y, x, "V_eff")
    b = effective_correction(prof, rho, eps, y, x, "V_eff")
    assert np.max(np.abs(a - b)) < 1e-13


def test_case_constants():
    assert case_constant(YSolution("exponential", 1.0)) == pytest.approx(1.0 / 8)
    assert case_constant(YSolution("exponential", 1.0, exponent_mult=2.0)) == pytest.approx(0.5)
    assert case_constant(YSolution("tanh-p", 1.0, p=2)) == pytest.approx(1.0 / 32)
    assert case_constant(YSolution("linear", 1.0)) == 0.0
    assert case_constant(YSolution("quadratic", 1.0), mu=2.0) == pytest.approx(3.0 / 32)
    with pytest.raises(ValidationError):
        case_constant(YSolution("quadratic", 1.0))

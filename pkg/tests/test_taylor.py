import numpy as np

from sga.taylor import (Jet, jet_const, jet_exp, jet_from_samples, jet_log,
                        jet_sqrt, jet_tanh, jet_variable)

X = np.linspace(-1.3, 1.7, 23)


def test_variable_and_const():
    xj = jet_variable(X, 3)
    assert np.allclose(xj.values, X)
    assert np.allclose(xj.deriv(1).values, 1.0)
    assert np.allclose(xj.deriv(2).values, 0.0)
    cj = jet_const(2.5, 3, X.size)
    assert np.allclose((xj + cj).values, X + 2.5)


def test_product_rule_matches_analytic():
    xj = jet_variable(X, 4)
    f = xj * xj * xj  # x^3
    assert np.allclose(f.deriv(1).values, 3 * X**2)
    assert np.allclose(f.deriv(2).values, 6 * X)
    assert np.allclose(f.deriv(3).values, 6.0)
    g = (1.0 + xj * xj) ** -2
    den = (1 + X**2)
    assert np.allclose(g.values, den**-2)
    assert np.allclose(g.deriv(1).values, -4 * X * den**-3)


def test_quotient():
    xj = jet_variable(X + 3.0, 4)
    q = (xj * xj - 1.0) / xj
    x = X + 3.0
    assert np.allclose(q.values, x - 1 / x)
    assert np.allclose(q.deriv(1).values, 1 + 1 / x**2)
    assert np.allclose(q.deriv(2).values, -2 / x**3)


def test_exp_tower():
    xj = jet_variable(X, 5)
    g = jet_exp(xj * xj * (-0.5))
    an = np.exp(-(X**2) / 2)
    assert np.allclose(g.values, an)
    assert np.allclose(g.deriv(1).values, -X * an)
    assert np.allclose(g.deriv(2).values, (X**2 - 1) * an)
    assert np.allclose(g.deriv(3).values, (3 * X - X**3) * an)
    assert np.allclose(g.deriv(4).values, (X**4 - 6 * X**2 + 3) * an)


def test_tanh_sqrt_log():
    xj = jet_variable(X, 4)
    t = jet_tanh(xj)
    sech2 = 1 / np.cosh(X) ** 2
    assert np.allclose(t.values, np.tanh(X))
    assert np.allclose(t.deriv(1).values, sech2)
    assert np.allclose(t.deriv(2).values, -2 * np.tanh(X) * sech2)

    pos = jet_variable(X + 2.0, 4)
    s = jet_sqrt(pos)
    assert np.allclose(s.values, np.sqrt(X + 2))
    assert np.allclose(s.deriv(1).values, 0.5 / np.sqrt(X + 2))
    assert np.allclose(s.deriv(2).values, -0.25 * (X + 2) ** -1.5)

    l = jet_log(pos)
    assert np.allclose(l.deriv(1).values, 1 / (X + 2))
    assert np.allclose(l.deriv(2).values, -((X + 2.0) ** -2))


def test_complex_offset_and_prefactor():
    xj = jet_variable(X, 3)
    t = jet_tanh(0.5 * xj + 0.25j * np.pi)
    # tanh(z/2 + i pi/4) = tanh z + i sech z
    assert np.allclose(t.values, np.tanh(X) + 1j / np.cosh(X))
    g = 1j * jet_exp(-1.0 * xj)
    assert np.allclose(g.values, 1j * np.exp(-X))
    assert np.allclose(g.deriv(1).values, -1j * np.exp(-X))


def test_integer_power():
    xj = jet_variable(X + 2.0, 3)
    assert np.allclose((xj**3).values, (X + 2) ** 3)
    assert np.allclose((xj**-2).values, (X + 2.0) ** -2)


def test_jet_from_samples_sixth_order():
    x = np.linspace(-3, 3, 801)
    f = np.exp(-(x**2) / 2)
    j = jet_from_samples(x, f, 3)
    assert np.max(np.abs(j.deriv(1).values - (-x * f))) < 1e-11
    assert np.max(np.abs(j.deriv(2).values - (x**2 - 1) * f)) < 1e-9
    assert np.max(np.abs(j.deriv(3).values - (3 * x - x**3) * f)) < 1e-7

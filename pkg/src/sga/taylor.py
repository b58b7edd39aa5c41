"""Grid-sampled truncated Taylor ("jet") arithmetic.

Every x-dependent function in the algebra layer is carried as its derivative
tower (f, f', ..., f^(K)) sampled on a common grid.  Sums, products,
quotients and the elementary functions below propagate the whole tower
exactly (Leibniz rule / recursive composition), so nested operator
applications never touch a finite-difference stencil and residual checks sit
at rounding level instead of stencil-truncation level.
"""

from __future__ import annotations

from math import comb

import numpy as np

__all__ = [
    "Jet",
    "jet_variable",
    "jet_const",
    "jet_exp",
    "jet_log",
    "jet_sqrt",
    "jet_tanh",
    "jet_from_samples",
]


class Jet:
    """Derivative tower c[k] = f^(k) sampled on a grid; shape (order+1, n)."""

    __slots__ = ("c",)

    def __init__(self, coeffs):
        c = np.atleast_2d(np.asarray(coeffs))
        self.c = c

    # -- basic views ------------------------------------------------------
    @property
    def order(self) -> int:
        return self.c.shape[0] - 1

    @property
    def n(self) -> int:
        return self.c.shape[1]

    @property
    def values(self) -> np.ndarray:
        return self.c[0]

    def deriv(self, k: int = 1) -> "Jet":
        """Jet of f^(k); order drops by k."""
        if k > self.order:
            raise ValueError(f"jet of order {self.order} cannot give derivative {k}")
        return Jet(self.c[k:])

    def truncate(self, order: int) -> "Jet":
        return Jet(self.c[: order + 1]) if order < self.order else self

    # -- ring operations ---------------------------------------------------
    def _coerce(self, other, order):
        if isinstance(other, Jet):
            return other
        return jet_const(other, order, self.n)

    def __add__(self, other):
        if not isinstance(other, Jet):
            c = self.c.astype(np.result_type(self.c.dtype, np.asarray(other).dtype))
            c[0] = c[0] + other
            return Jet(c)
        k = min(self.order, other.order)
        return Jet(self.c[: k + 1] + other.c[: k + 1])

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.c)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Jet) else -np.asarray(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Jet):
            return Jet(self.c * other)
        K = min(self.order, other.order)
        a, b = self.c, other.c
        dtype = np.result_type(a.dtype, b.dtype)
        out = np.zeros((K + 1, self.n), dtype=dtype)
        for k in range(K + 1):
            for j in range(k + 1):
                out[k] += comb(k, j) * a[j] * b[k - j]
        return Jet(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Jet):
            return Jet(self.c / other)
        K = min(self.order, other.order)
        a, b = self.c, other.c
        dtype = np.result_type(a.dtype, b.dtype)
        out = np.zeros((K + 1, self.n), dtype=dtype)
        out[0] = a[0] / b[0]
        for k in range(1, K + 1):
            acc = a[k].astype(dtype, copy=True)
            for j in range(k):
                acc -= comb(k, j) * out[j] * b[k - j]
            out[k] = acc / b[0]
        return Jet(out)

    def __rtruediv__(self, other):
        return jet_const(other, self.order, self.n) / self

    def __pow__(self, p: int):
        if not isinstance(p, (int, np.integer)):
            raise TypeError("jet powers are integer; use jet_exp/jet_log for real exponents")
        if p < 0:
            return 1.0 / (self ** (-p))
        out = jet_const(1.0, self.order, self.n)
        base = self
        while p:
            if p & 1:
                out = out * base
            base = base * base if p > 1 else base
            p >>= 1
        return out


def jet_variable(x, order: int) -> Jet:
    """Jet of the identity map f(x) = x."""
    x = np.asarray(x, dtype=float)
    c = np.zeros((order + 1, x.size))
    c[0] = x
    if order >= 1:
        c[1] = 1.0
    return Jet(c)


def jet_const(value, order: int, n: int) -> Jet:
    value = np.asarray(value)
    c = np.zeros((order + 1, n), dtype=value.dtype if value.dtype.kind == "c" else float)
    c[0] = value
    return Jet(c)


def jet_exp(f: Jet) -> Jet:
    """g = exp(f):  g^(k) = sum_j C(k-1, j-1) f^(j) g^(k-j)."""
    K = f.order
    a = f.c
    out = np.zeros((K + 1, f.n), dtype=np.result_type(a.dtype, float))
    out[0] = np.exp(a[0])
    for k in range(1, K + 1):
        acc = np.zeros(f.n, dtype=out.dtype)
        for j in range(1, k + 1):
            acc += comb(k - 1, j - 1) * a[j] * out[k - j]
        out[k] = acc
    return Jet(out)


def jet_log(f: Jet) -> Jet:
    """g = log(f):  g' = f'/f, recursively."""
    K = f.order
    a = f.c
    out = np.zeros((K + 1, f.n), dtype=np.result_type(a.dtype, float))
    out[0] = np.log(a[0])
    if K >= 1:
        # g' tower equals the tower of f'/f at order K-1
        ratio = f.deriv(1) / f.truncate(K - 1)
        out[1:] = ratio.c
    return Jet(out)


def jet_sqrt(f: Jet) -> Jet:
    """g = sqrt(f):  g^(k) = [f^(k) - sum_{0<j<k} C(k,j) g^(j) g^(k-j)] / (2 g)."""
    K = f.order
    a = f.c
    out = np.zeros((K + 1, f.n), dtype=np.result_type(a.dtype, float))
    out[0] = np.sqrt(a[0])
    for k in range(1, K + 1):
        acc = a[k].astype(out.dtype, copy=True)
        for j in range(1, k):
            acc -= comb(k, j) * out[j] * out[k - j]
        out[k] = acc / (2.0 * out[0])
    return Jet(out)


def jet_tanh(f: Jet) -> Jet:
    """g = tanh(f) via g' = (1 - g^2) f', built order by order."""
    K = f.order
    a = f.c
    out = np.zeros((K + 1, f.n), dtype=np.result_type(a.dtype, float))
    out[0] = np.tanh(a[0])
    # s = 1 - g^2 tower, grown alongside g
    s = np.zeros_like(out)
    s[0] = 1.0 - out[0] ** 2
    for k in range(1, K + 1):
        # g^(k) = [s * f']^(k-1) = sum_j C(k-1,j) s^(j) f^(k-j)
        acc = np.zeros(f.n, dtype=out.dtype)
        for j in range(k):
            acc += comb(k - 1, j) * s[j] * a[k - j]
        out[k] = acc
        # s^(k) = -(g^2)^(k) by Leibniz
        sk = np.zeros(f.n, dtype=out.dtype)
        for j in range(k + 1):
            sk += comb(k, j) * out[j] * out[k - j]
        s[k] = -sk
    return Jet(out)


# ---------------------------------------------------------------------------
# Fallback for sampled-only data: 6th-order stencils with one-sided closures.
# ---------------------------------------------------------------------------

_CENTRAL_D1 = np.array([-1.0, 9.0, -45.0, 0.0, 45.0, -9.0, 1.0]) / 60.0


def _local_polyfit_derivs(x, f, i, order, width=7):
    lo = max(0, min(i - width // 2, len(x) - width))
    xs = x[lo : lo + width] - x[i]
    V = np.vander(xs, width, increasing=True)
    coef = np.linalg.solve(V, f[lo : lo + width])
    facts = np.cumprod([1.0] + list(range(1, order + 1)))
    return np.array([coef[k] * facts[k] if k < width else 0.0 for k in range(order + 1)])


def jet_from_samples(x, f, order: int) -> Jet:
    """Build a jet from plain samples on a uniform grid.

    Interior points use 6th-order central differences (applied recursively
    for higher orders); the outermost points use local degree-6 polynomial
    fits.  Exact jets are always preferable; this exists for user-tabulated
    states only.
    """
    x = np.asarray(x, dtype=float)
    f = np.asarray(f)
    n = x.size
    if n < 7:
        raise ValueError("need at least 7 samples for the 6th-order stencil")
    h = x[1] - x[0]
    if not np.allclose(np.diff(x), h, rtol=1e-10, atol=0):
        raise ValueError("sampled jets require a uniform grid")
    c = np.zeros((order + 1, n), dtype=np.result_type(f.dtype, float))
    c[0] = f
    cur = f
    for k in range(1, order + 1):
        d = np.empty(n, dtype=c.dtype)
        d[3:-3] = np.convolve(cur, _CENTRAL_D1[::-1], mode="valid") / h
        for i in (0, 1, 2, n - 3, n - 2, n - 1):
            if np.iscomplexobj(cur):
                d[i] = (
                    _local_polyfit_derivs(x, cur.real, i, 1)[1]
                    + 1j * _local_polyfit_derivs(x, cur.imag, i, 1)[1]
                )
            else:
                d[i] = _local_polyfit_derivs(x, cur, i, 1)[1]
        c[k] = d
        cur = d
    return Jet(c)

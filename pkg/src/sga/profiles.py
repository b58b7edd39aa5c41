"""Position-dependent mass profiles m(x) and the mass integral mu(x).

mu(x) = integral of sqrt(m) is the universal coordinate: every potential in
the catalog takes its textbook constant-mass shape as a function of mu.  A
profile therefore has to deliver m with derivatives (for the ordering
corrections) plus an accurate, invertible mu.

Built-in kinds cover the three mu-image classes the catalog needs:

    constant          m = c              mu-image: the whole line
    exponential       m = exp(2 beta x)  mu-image: a half line
    rational-arctan   m = (1+x^2)^-2     mu-image: a bounded interval
    tabulated         CSV samples        mu-image: whatever the data spans
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import quad
from scipy.interpolate import CubicSpline
from scipy.optimize import brentq

from .errors import DomainError, RangeError, ValidationError
from .taylor import Jet, jet_exp, jet_sqrt, jet_variable

__all__ = ["MassProfile", "make_profile", "mu_of", "mu_inverse", "load_tabulated_csv"]

_KINDS = ("constant", "exponential", "rational-arctan", "tabulated")


@dataclass(frozen=True)
class MassProfile:
    """Immutable positive mass profile with its anchored mass integral.

    Attributes
    ----------
    kind : str
        One of {constant, exponential, rational-arctan, tabulated}.
    params : tuple
        Kind-specific parameters (see make_profile).
    domain : (float, float)
        Open interval on which m is defined; may be infinite.
    anchor : (float, float)
        (x0, mu0) fixing the integration constant of mu.
    """

    kind: str
    params: tuple
    domain: tuple
    anchor: tuple
    _spline: object = field(default=None, repr=False, compare=False)

    # -- mass -------------------------------------------------------------
    def m(self, x):
        """m(x), vectorized."""
        x = np.asarray(x, dtype=float)
        self._check_domain(x)
        if self.kind == "constant":
            return np.full_like(x, self.params[0])
        if self.kind == "exponential":
            return np.exp(2.0 * self.params[0] * x)
        if self.kind == "rational-arctan":
            return (1.0 + x * x) ** -2
        return np.exp(self._spline(x))

    def m_jet(self, x, order: int) -> Jet:
        """Jet of m; exact for the closed-form kinds, spline-backed otherwise."""
        x = np.asarray(x, dtype=float)
        self._check_domain(x)
        xj = jet_variable(x, order)
        if self.kind == "constant":
            return 0.0 * xj + self.params[0]
        if self.kind == "exponential":
            return jet_exp(2.0 * self.params[0] * xj)
        if self.kind == "rational-arctan":
            return (1.0 + xj * xj) ** -2
        if order > 2:
            raise ValidationError("tabulated profiles provide m derivatives up to order 2")
        s = self._spline
        c = np.empty((order + 1, x.size))
        c[0] = np.exp(s(x))
        if order >= 1:
            c[1] = c[0] * s(x, 1)
        if order >= 2:
            c[2] = c[0] * (s(x, 1) ** 2 + s(x, 2))
        return Jet(c)

    # -- mass integral ------------------------------------------------------
    def mu(self, x):
        """mu(x) = anchor-consistent integral of sqrt(m); vectorized."""
        scalar = np.isscalar(x)
        x = np.atleast_1d(np.asarray(x, dtype=float))
        self._check_domain(x)
        x0, mu0 = self.anchor
        if self.kind == "constant":
            out = mu0 + math.sqrt(self.params[0]) * (x - x0)
        elif self.kind == "exponential":
            b = self.params[0]
            out = mu0 + (np.exp(b * x) - math.exp(b * x0)) / b
        elif self.kind == "rational-arctan":
            out = mu0 + np.arctan(x) - math.atan(x0)
        else:
            out = mu0 + self._quad_from_anchor(x)
        return float(out[0]) if scalar else out

    def _quad_from_anchor(self, x):
        # cumulative quadrature over sorted increments keeps each quad call
        # short-range and the absolute error near machine level
        grid = np.unique(np.concatenate(([self.anchor[0]], x)))
        vals = {grid[0]: 0.0}
        acc = 0.0
        for a, b in zip(grid[:-1], grid[1:]):
            inc, _ = quad(lambda u: math.sqrt(self._m_scalar(u)), a, b,
                          epsabs=1e-13, epsrel=1e-13, limit=200)
            acc += inc
            vals[b] = acc
        base = vals[self.anchor[0]]
        return np.array([vals[xi] - base for xi in x])

    def _m_scalar(self, u):
        if self.kind == "tabulated":
            return math.exp(float(self._spline(u)))
        return float(self.m(np.array([u]))[0])

    def mu_quad(self, x):
        """Quadrature-path mu, available for every kind (cross-check route)."""
        scalar = np.isscalar(x)
        x = np.atleast_1d(np.asarray(x, dtype=float))
        self._check_domain(x)
        out = self.anchor[1] + self._quad_from_anchor(x)
        return float(out[0]) if scalar else out

    def mu_jet(self, x, order: int) -> Jet:
        """Jet of mu: value from mu(), derivative tower from sqrt(m)."""
        x = np.asarray(x, dtype=float)
        mu_vals = self.mu(x)
        if order == 0:
            return Jet(np.atleast_2d(mu_vals))
        root = jet_sqrt(self.m_jet(x, order - 1))
        c = np.vstack([np.atleast_1d(mu_vals)[None, :], root.c])
        return Jet(c)

    def mu_image(self):
        """(mu_lo, mu_hi) over the open domain."""
        x_lo, x_hi = self.domain
        x0, mu0 = self.anchor
        if self.kind == "constant":
            s = math.sqrt(self.params[0])
            lo = -math.inf if x_lo == -math.inf else mu0 + s * (x_lo - x0)
            hi = math.inf if x_hi == math.inf else mu0 + s * (x_hi - x0)
            return (lo, hi)
        if self.kind == "exponential":
            b = self.params[0]
            e0 = math.exp(b * x0) / b
            lo = mu0 - e0 if b > 0 else -math.inf
            hi = math.inf if b > 0 else mu0 - e0
            if x_lo != -math.inf:
                lo = mu0 + (math.exp(b * x_lo) - math.exp(b * x0)) / b
            if x_hi != math.inf:
                hi = mu0 + (math.exp(b * x_hi) - math.exp(b * x0)) / b
            return (min(lo, hi), max(lo, hi))
        if self.kind == "rational-arctan":
            a0 = math.atan(x0)
            lo = mu0 + (-math.pi / 2 - a0) if x_lo == -math.inf else mu0 + math.atan(x_lo) - a0
            hi = mu0 + (math.pi / 2 - a0) if x_hi == math.inf else mu0 + math.atan(x_hi) - a0
            return (lo, hi)
        return (self.mu(self.domain[0]), self.mu(self.domain[1]))

    def mu_inverse(self, mu):
        """x with mu(x) = mu, to |mu(x) - mu| < 1e-12."""
        scalar = np.isscalar(mu)
        mu_arr = np.atleast_1d(np.asarray(mu, dtype=float))
        lo, hi = self.mu_image()
        if np.any(mu_arr <= lo) or np.any(mu_arr >= hi):
            raise RangeError(
                f"mu={mu} outside the image ({lo:.6g}, {hi:.6g}) of this profile"
            )
        x0, mu0 = self.anchor
        if self.kind == "constant":
            out = x0 + (mu_arr - mu0) / math.sqrt(self.params[0])
        elif self.kind == "exponential":
            b = self.params[0]
            out = np.log(b * (mu_arr - mu0) + math.exp(b * x0)) / b
        elif self.kind == "rational-arctan":
            out = np.tan(mu_arr - mu0 + math.atan(x0))
        else:
            out = np.array([self._invert_scalar(t) for t in mu_arr])
        return float(out[0]) if scalar else out

    def _invert_scalar(self, target):
        a, b = self.domain
        x = brentq(lambda u: self.mu(u) - target, a, b, xtol=1e-13, rtol=8.9e-16)
        # Newton polish: mu' = sqrt(m) is exactly known
        for _ in range(3):
            r = self.mu(x) - target
            if abs(r) < 1e-13:
                break
            x -= r / math.sqrt(self._m_scalar(x))
        return x

    # -- plumbing -----------------------------------------------------------
    def contains(self, x) -> bool:
        x = np.asarray(x, dtype=float)
        if self.kind == "tabulated":  # the spline span is closed
            return bool(np.all(x >= self.domain[0]) and np.all(x <= self.domain[1]))
        return bool(np.all(x > self.domain[0]) and np.all(x < self.domain[1]))

    def _check_domain(self, x):
        if not self.contains(x):
            arr = np.atleast_1d(np.asarray(x, dtype=float))
            bad = arr[(arr <= self.domain[0]) | (arr >= self.domain[1])]
            raise DomainError(f"x={bad.ravel()[:3]} outside profile domain {self.domain}")

    @property
    def label(self) -> str:
        p = ",".join(f"{v:g}" for v in self.params)
        return f"{self.kind}({p})@anchor({self.anchor[0]:g},{self.anchor[1]:g})"


def make_profile(kind: str, params=None, anchor=(0.0, 0.0), domain=None,
                 table=None) -> MassProfile:
    """Construct a mass profile.

    Parameters
    ----------
    kind : {"constant", "exponential", "rational-arctan", "tabulated"}
    params : sequence of float
        constant: [c] with c > 0 (default [1]); exponential: [beta], beta != 0;
        rational-arctan: none; tabulated: none (pass `table`).
    anchor : (x0, mu0)
        Fixes mu(x0) = mu0.  x0 must lie inside the domain.
    domain : (x_lo, x_hi), optional
        Restriction of the natural domain.
    table : (x_samples, m_samples), optional
        Strictly increasing x with positive m; required for kind="tabulated".
    """
    if kind not in _KINDS:
        raise ValidationError(f"unknown profile kind {kind!r}; expected one of {_KINDS}")
    params = tuple(float(p) for p in (params or ()))
    spline = None

    if kind == "constant":
        params = params or (1.0,)
        if params[0] <= 0:
            raise ValidationError(f"constant mass must be positive, got {params[0]} at every x")
        natural = (-math.inf, math.inf)
    elif kind == "exponential":
        if not params:
            params = (1.0,)
        if params[0] == 0:
            raise ValidationError("exponential profile needs beta != 0")
        natural = (-math.inf, math.inf)
    elif kind == "rational-arctan":
        params = ()
        natural = (-math.inf, math.inf)
    else:
        if table is None:
            raise ValidationError("tabulated profiles need table=(x, m) or load_tabulated_csv")
        xs = np.asarray(table[0], dtype=float)
        ms = np.asarray(table[1], dtype=float)
        if xs.ndim != 1 or xs.size < 4 or np.any(np.diff(xs) <= 0):
            raise ValidationError("tabulated profile needs >=4 strictly increasing x samples")
        bad = np.where(ms <= 0)[0]
        if bad.size:
            raise ValidationError(
                f"non-positive mass m={ms[bad[0]]:g} at x={xs[bad[0]]:g} in the table"
            )
        # spline of log m: C2 and positive by construction
        spline = CubicSpline(xs, np.log(ms))
        natural = (float(xs[0]), float(xs[-1]))

    dom = tuple(float(v) for v in (domain or natural))
    if dom[0] >= dom[1]:
        raise ValidationError(f"empty domain {dom}")
    anchor = (float(anchor[0]), float(anchor[1]))
    if not (dom[0] < anchor[0] < dom[1]) and kind != "tabulated":
        raise ValidationError(f"anchor x0={anchor[0]} outside domain {dom}")
    if kind == "tabulated" and not (dom[0] <= anchor[0] <= dom[1]):
        raise ValidationError(f"anchor x0={anchor[0]} outside table span {dom}")
    return MassProfile(kind=kind, params=params, domain=dom, anchor=anchor, _spline=spline)


def load_tabulated_csv(path, anchor=(None, 0.0)) -> MassProfile:
    """Read a two-column CSV with header line `x,m` into a tabulated profile.

    If the anchor x0 is None the first sample is used.
    """
    xs, ms = [], []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if [h.strip() for h in header[:2]] != ["x", "m"]:
            raise ValidationError(f"expected header 'x,m' in {path}, got {header!r}")
        for row in reader:
            if not row:
                continue
            xs.append(float(row[0]))
            ms.append(float(row[1]))
    x0 = xs[0] if anchor[0] is None else float(anchor[0])
    return make_profile("tabulated", anchor=(x0, anchor[1]), table=(np.array(xs), np.array(ms)))


def mu_of(profile: MassProfile, x):
    """Mass integral at x (functional form of MassProfile.mu)."""
    return profile.mu(x)


def mu_inverse(profile: MassProfile, mu):
    """Invert the mass integral (functional form of MassProfile.mu_inverse)."""
    return profile.mu_inverse(mu)

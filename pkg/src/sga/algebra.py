"""Six-generator differential realization of so(2,2)-type algebras.

Two commuting (on the closure locus) su(1,1)-like families act on states
psi = exp(i(nu*phi + nu'*chi)) R(x).  The angles are never discretized: the
ladder operators shift (nu, nu') exactly and act on R through ten coordinate
functions (h1, g1, f1, c1, k1, h2, g2, f2, c2, k2).

With u = q y^2 / sqrt(b), the two independent functions are

    k2 = sqrt(b) (1 + u) / (1 - u),      f2 = delta y / (1 - u),

h2 is fixed by h2 y' = sqrt(b) y, and g2 carries the mass-dependent term

    g2/sqrt(b) = (2 - u)/(1 - u) - 3 y y''/(2 y'^2) + m' y/(2 m y').

The J family mirrors the L family through h1 = A h2, f1 = A k2, k1 = A f2,
g1 = A g2 with A^2 a b = 1.  In each family the coefficient of the family's
own number operator is the (1+u)/(1-u)-type function and the coefficient of
the other family's number operator is the delta*y-type function; that is the
unique slot assignment under which [J+,J-] = -2a J0 and [L+,L-] = -2b L0
close identically for every (q, delta).  The mixed commutators [J, L] vanish
exactly on the locus delta^2 = 4 q sqrt(b), where k2^2 - f2^2 = b.

Everything is carried as grid-sampled jets, so nested operator applications
are stencil-free and residuals sit at rounding level.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import SingularityError, ValidationError
from .profiles import MassProfile
from .taylor import Jet, jet_from_samples

__all__ = [
    "AlgebraSignature",
    "RealizationFns",
    "BasisState",
    "CasimirResult",
    "build_realization",
    "gaussian_state",
    "apply_generator",
    "commutator_residual",
    "casimir_apply",
    "second_casimir_apply",
    "structure_residuals",
    "GENERATORS",
]

GENERATORS = ("Jplus", "Jminus", "J0", "Lplus", "Lminus", "L0")


@dataclass(frozen=True)
class AlgebraSignature:
    """(a, b) in {+1, -1}^2 labelling the real form; A satisfies A^2 a b = 1."""

    a: int = 1
    b: int = 1

    def __post_init__(self):
        if self.a not in (1, -1) or self.b not in (1, -1):
            raise ValidationError("signature entries a, b must be +1 or -1")

    @property
    def A(self):
        val = cmath.sqrt(1.0 / (self.a * self.b))
        return val.real if abs(val.imag) < 1e-15 else val

    @property
    def sqrt_b(self):
        return 1.0 if self.b == 1 else 1j

    @property
    def name(self) -> str:
        return {(1, 1): "so(2,2)", (1, -1): "so(3)+so(2,1)", (-1, -1): "so(4)"}[(self.a, self.b)]


@dataclass(frozen=True)
class RealizationFns:
    """The ten coordinate functions of one realization, sampled as jets.

    c1 = c2 = 0 always; the J-family functions are A-rescalings of the
    L-family ones and are exposed as properties.
    """

    sig: AlgebraSignature
    q: float
    delta: float
    x: np.ndarray
    y: Jet
    h2: Jet
    g2: Jet
    f2: Jet
    k2: Jet
    ordering_eta_eps: tuple = (0.0, -1.0)
    y_label: str = ""
    profile_label: str = ""

    @property
    def h1(self) -> Jet:
        return self.sig.A * self.h2

    @property
    def g1(self) -> Jet:
        return self.sig.A * self.g2

    @property
    def f1(self) -> Jet:
        # J-family J0 coefficient: the (1+u)/(1-u)-type function
        return self.sig.A * self.k2

    @property
    def k1(self) -> Jet:
        # J-family L0 coefficient: the delta*y-type function
        return self.sig.A * self.f2

    @property
    def closure_gap(self) -> np.ndarray:
        """Samples of k2^2 - f2^2 - b; identically zero iff delta^2 = 4 q sqrt(b)."""
        gap = (self.k2 * self.k2 - self.f2 * self.f2).values - self.sig.b
        return gap


@dataclass(frozen=True)
class BasisState:
    """State psi = exp(i(nu phi + nu' chi)) R(x); R carried as a jet."""

    nu: float
    nu_prime: float
    R: Jet
    x: np.ndarray

    @property
    def values(self):
        return self.R.values

    @classmethod
    def from_samples(cls, x, samples, nu, nu_prime, order=4):
        return cls(nu=nu, nu_prime=nu_prime, R=jet_from_samples(x, samples, order), x=np.asarray(x))


@dataclass(frozen=True)
class CasimirResult:
    """Samples of (C psi)(x) plus the optional lambda eigen-data."""

    samples: np.ndarray
    x: np.ndarray
    lam: float | None = None

    @property
    def eigenvalue(self):
        return None if self.lam is None else self.lam * (self.lam + 2.0)


def _as_y_jet(y_spec, profile: MassProfile, x: np.ndarray, order: int) -> tuple[Jet, str]:
    """Accept a YSolution-like object or an ('exp', alpha)-style shorthand."""
    if hasattr(y_spec, "jet_on"):
        return y_spec.jet_on(profile, x, order), getattr(y_spec, "label", "y")
    form, alpha = y_spec
    from .matching import YSolution  # late import: matching depends on algebra users only

    return YSolution(form=form, alpha=alpha).jet_on(profile, x, order), f"{form}:alpha={alpha:g}"


def build_realization(sig: AlgebraSignature, q: float, delta: float, y_spec,
                      profile: MassProfile, window, n: int = 400,
                      ordering_eta_eps=(0.0, -1.0), order: int = 4) -> RealizationFns:
    """Assemble the ten functions on a uniform window.

    Parameters
    ----------
    sig : AlgebraSignature
    q, delta : float
        Integration constants of the first-order structure ODEs.
    y_spec : YSolution or (form, alpha)
        Coordinate function y(x); must be C3 and nonzero on the interior.
    profile : MassProfile
    window : (x_lo, x_hi)
        Evaluation window, inside the profile domain.
    n : int
        Sample count.
    ordering_eta_eps : (eta, eps)
        Recorded for report provenance; the realization itself does not
        depend on the kinetic ordering.

    Raises
    ------
    SingularityError
        If 1 - q y^2/sqrt(b) vanishes inside the window.
    """
    x = np.linspace(window[0], window[1], n)
    yj, y_label = _as_y_jet(y_spec, profile, x, order + 2)
    sb = sig.sqrt_b
    u = (q / sb) * yj * yj
    denom = 1.0 - u
    dvals = denom.values
    if np.isrealobj(dvals) and (np.any(dvals == 0) or np.any(dvals[:-1] * dvals[1:] < 0)
                                or np.min(np.abs(dvals)) < 1e-12):
        i = int(np.argmin(np.abs(dvals)))
        raise SingularityError(
            f"1 - q y^2/sqrt(b) vanishes near x = {x[i]:.6g} inside the window", location=x[i]
        )
    if np.any(np.abs(yj.deriv(1).values) < 1e-14):
        raise ValidationError("y'(x) vanishes inside the window; realization undefined there")

    k2 = sb * (1.0 + u) / denom
    f2 = delta * yj / denom
    h2 = sb * yj / yj.deriv(1)

    mj = profile.m_jet(x, order + 1)
    g2 = sb * (
        (2.0 - u) / denom
        - 1.5 * (yj * yj.deriv(2)) / (yj.deriv(1) * yj.deriv(1))
        + 0.5 * (mj.deriv(1) * yj) / (mj * yj.deriv(1))
    )

    K = order
    return RealizationFns(
        sig=sig, q=q, delta=delta, x=x, y=yj.truncate(K + 1),
        h2=h2.truncate(K), g2=g2.truncate(K), f2=f2.truncate(K), k2=k2.truncate(K),
        ordering_eta_eps=tuple(ordering_eta_eps), y_label=y_label,
        profile_label=profile.label,
    )


def gaussian_state(fns_or_x, nu: float = 0.0, nu_prime: float = 0.0,
                   center: float = 0.0, width: float = 1.0, order: int = 4) -> BasisState:
    """Unit-amplitude Gaussian R(x) = exp(-(x-c)^2 / (2 w^2)) as an exact jet."""
    x = fns_or_x.x if isinstance(fns_or_x, RealizationFns) else np.asarray(fns_or_x, dtype=float)
    from .taylor import jet_exp, jet_variable

    xj = jet_variable(x, order)
    arg = (xj - center) * (xj - center) * (-0.5 / width**2)
    return BasisState(nu=nu, nu_prime=nu_prime, R=jet_exp(arg), x=x)


def _bracket(sign: int, h: Jet, g: Jet, own: Jet, cross: Jet,
             own_n: float, cross_n: float, R: Jet) -> Jet:
    """(±h d/dx ± g + own*n_own + cross*n_cross) R, order drops by one."""
    K = R.order - 1
    out = sign * (h.truncate(K) * R.deriv(1) + g.truncate(K) * R.truncate(K))
    out = out + (own_n * own.truncate(K) + cross_n * cross.truncate(K)) * R.truncate(K)
    return out


def apply_generator(gen: str, fns: RealizationFns, state: BasisState) -> BasisState:
    """Act with one generator; (nu, nu') shifts are exact bookkeeping.

    Jplus:  (nu+1, nu',  h1 R' + g1 R + f1 nu R + k1 nu' R)
    Jminus: (nu-1, nu', -h1 R' - g1 R + f1 nu R + k1 nu' R)
    J0:     (nu,   nu',  nu R)
    and the mirrored L family with (nu <-> nu'), L0 coefficient k2,
    J0 coefficient f2.
    """
    nu, nup, R = state.nu, state.nu_prime, state.R
    if gen == "J0":
        return BasisState(nu, nup, R * nu, state.x)
    if gen == "L0":
        return BasisState(nu, nup, R * nup, state.x)
    if gen == "Jplus":
        return BasisState(nu + 1, nup, _bracket(+1, fns.h1, fns.g1, fns.f1, fns.k1, nu, nup, R), state.x)
    if gen == "Jminus":
        return BasisState(nu - 1, nup, _bracket(-1, fns.h1, fns.g1, fns.f1, fns.k1, nu, nup, R), state.x)
    if gen == "Lplus":
        return BasisState(nu, nup + 1, _bracket(+1, fns.h2, fns.g2, fns.k2, fns.f2, nup, nu, R), state.x)
    if gen == "Lminus":
        return BasisState(nu, nup - 1, _bracket(-1, fns.h2, fns.g2, fns.k2, fns.f2, nup, nu, R), state.x)
    raise ValidationError(f"unknown generator {gen!r}; expected one of {GENERATORS}")


def _expected_commutator(genA: str, genB: str, sig: AlgebraSignature):
    """RHS of the commutation table as (coefficient, generator-or-'J0'/'L0'/None)."""
    table = {
        ("J0", "Jplus"): (+1.0, "Jplus"),
        ("J0", "Jminus"): (-1.0, "Jminus"),
        ("Jplus", "Jminus"): (-2.0 * sig.a, "J0"),
        ("L0", "Lplus"): (+1.0, "Lplus"),
        ("L0", "Lminus"): (-1.0, "Lminus"),
        ("Lplus", "Lminus"): (-2.0 * sig.b, "L0"),
    }
    if (genA, genB) in table:
        return table[(genA, genB)]
    if (genB, genA) in table:
        c, g = table[(genB, genA)]
        return (-c, g)
    return (0.0, None)  # mixed J/L pair


def commutator_residual(genA: str, genB: str, fns: RealizationFns,
                        sig: AlgebraSignature, state: BasisState) -> float:
    """max |([A, B] - expected) psi| over the window."""
    if sig != fns.sig:
        raise ValidationError("signature does not match the realization")
    AB = apply_generator(genA, fns, apply_generator(genB, fns, state))
    BA = apply_generator(genB, fns, apply_generator(genA, fns, state))
    comm = AB.R.values - BA.R.values
    coeff, gen = _expected_commutator(genA, genB, sig)
    if gen is not None:
        comm = comm - coeff * apply_generator(gen, fns, state).R.truncate(0).values
    return float(np.max(np.abs(comm)))


def _family_quadratic(fns, state, family: str) -> np.ndarray:
    """Samples of (-s X+ X- + X0^2 - X0) psi for one su(1,1) family."""
    s = fns.sig.a if family == "J" else fns.sig.b
    plus, minus = ("Jplus", "Jminus") if family == "J" else ("Lplus", "Lminus")
    n0 = state.nu if family == "J" else state.nu_prime
    pm = apply_generator(plus, fns, apply_generator(minus, fns, state))
    return -s * pm.R.values + (n0 * n0 - n0) * state.R.values


def casimir_apply(fns: RealizationFns, state: BasisState, mode: str = "composed",
                  lam: float | None = None) -> CasimirResult:
    """Apply the quadratic invariant 2[-a J+J- + J0^2 - J0 - b L+L- + L0^2 - L0].

    mode="composed" builds it from ladder applications; mode="closed"
    evaluates the equivalent second-order differential expression

        4b h2^2 R'' + 4b h2 (h2' + 2 g2 - k2) R'
        + [4b (h2 g2' + g2^2 - k2 g2)
           + 2 (1 - b (k2^2 + f2^2)) (nu^2 + nu'^2) - 8 b f2 k2 nu nu'] R.
    """
    if mode == "composed":
        vals = 2.0 * (_family_quadratic(fns, state, "J") + _family_quadratic(fns, state, "L"))
        return CasimirResult(samples=vals, x=state.x, lam=lam)
    if mode != "closed":
        raise ValidationError(f"unknown casimir mode {mode!r}")
    b = fns.sig.b
    nu, nup, R = state.nu, state.nu_prime, state.R
    h2, g2, f2, k2 = fns.h2, fns.g2, fns.f2, fns.k2
    c2 = 4.0 * b * (h2 * h2).values
    c1 = (4.0 * b) * (h2 * (h2.deriv(1) + 2.0 * g2 - k2)).values
    c0 = (
        4.0 * b * (h2 * g2.deriv(1) + g2 * g2 - k2 * g2).values
        + 2.0 * (1.0 - b * (k2 * k2 + f2 * f2).values) * (nu * nu + nup * nup)
        - 8.0 * b * (f2 * k2).values * nu * nup
    )
    vals = c2 * R.deriv(2).values + c1 * R.deriv(1).values + c0 * R.values
    return CasimirResult(samples=vals, x=state.x, lam=lam)


def second_casimir_apply(fns: RealizationFns, state: BasisState,
                         mode: str = "composed") -> CasimirResult:
    """The rank-2 partner invariant 2[-a J+J- + J0^2 - J0] - 2[-b L+L- + L0^2 - L0].

    Closed form (mode="closed"): -2 b (k2^2 - f2^2 - b)(nu^2 - nu'^2) psi,
    which exhibits the nullity on the delta^2 = 4 q sqrt(b) locus and on
    nu^2 = nu'^2 states.
    """
    if mode == "composed":
        vals = 2.0 * (_family_quadratic(fns, state, "J") - _family_quadratic(fns, state, "L"))
        return CasimirResult(samples=vals, x=state.x)
    if mode != "closed":
        raise ValidationError(f"unknown casimir mode {mode!r}")
    pref = -2.0 * fns.sig.b * (state.nu**2 - state.nu_prime**2)
    return CasimirResult(samples=pref * fns.closure_gap * state.R.values, x=state.x)


def structure_residuals(fns: RealizationFns) -> dict:
    """Max-norm residuals of the first-order structure relations.

    ode_f2:   h2 f2' - k2 f2            (= 0 for all q, delta)
    ode_k2:   k2^2 - h2 k2' - b         (= 0 for all q, delta)
    h2_y:     h2 y' - sqrt(b) y         (definition of h2)
    closure_identity: k2^2 - f2^2 - b   (= 0 iff delta^2 = 4 q sqrt(b))
    closure_identity_formula: gap - (4 q sqrt(b) - delta^2) y^2/(1-u)^2
    """
    sb = fns.sig.sqrt_b
    y, h2, f2, k2 = fns.y, fns.h2, fns.f2, fns.k2
    K = h2.order - 1
    ode_f2 = (h2.truncate(K) * f2.deriv(1) - (k2 * f2).truncate(K)).values
    ode_k2 = (k2 * k2).truncate(K).values - (h2.truncate(K) * k2.deriv(1)).values - fns.sig.b
    h2_y = (h2 * y.deriv(1).truncate(h2.order) - sb * y.truncate(h2.order)).values
    gap = fns.closure_gap
    u = (fns.q / sb) * (y * y)
    predicted = (4.0 * fns.q * sb - fns.delta**2) * (y * y).values / (1.0 - u.values) ** 2
    mx = lambda v: float(np.max(np.abs(v)))
    return {
        "ode_f2": mx(ode_f2),
        "ode_k2": mx(ode_k2),
        "h2_y": mx(h2_y),
        "closure_identity": mx(gap),
        "closure_identity_formula": mx(gap - predicted),
    }

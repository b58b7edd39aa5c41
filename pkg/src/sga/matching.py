"""Matching layer between the algebra and the mass-deformed Hamiltonians.

A case is a choice of (q, b) plus six reals (r0, t0, c0, a_r, a_t, a_c)
making the ladder coefficients affine in the energy,

    r(E) = -r0 E + a_r,   t(E) = -t0 E + a_t,   c(E) = -c0 E + a_c.

The generating function

    S(x) = y'^2 / m = 8 y^2 / (r0 F y^2 + t0 G y^2 + c0),

with F, G the ladder weight functions, fixes y(x) case by case:

    A-exponential  (q=0, r0=t0=0)      y = exp(-alpha mu),  alpha = 2 sqrt(2/c0)
    A-quadratic    (q=0, c0=0, r0=-t0) y = (alpha/4) mu^2,  alpha = 2/(delta r0)
    A-linear       (q=0, c0=0, r0=t0)  y = alpha mu,        alpha = 2/(delta sqrt(r0))
    B-I            (q=1, r0=t0=0)      y = exp(-alpha mu),  alpha = 2 sqrt(2/c0)
    B-II           (q=1, c0=0, r0=t0)  y = tanh(alpha mu / 2p), alpha = 4p/sqrt(r0(4+delta^2))

The kinetic-ordering correction is the (eta, eps)-dependent effective
potential; in mass-integral derivatives it reads

    U_eff = [2 eta^2 + 2 eta (1+eps) + 3 eps/2 + 7/8] mu''^2 / mu'^4
            - (1 + 2 eps)/4 * mu''' / mu'^3,

and equals the y-form expression

    V_eff = (3/8m)(y''/y')^2 - (1/4m)(y'''/y')
            + (m'^2/8m^3)[(1+2 eta)^2 + 4 eps (1+eta)] - eps m''/(4m^2)

minus a case constant (rate^2/8 for exponential and tanh forms, 3/(8 mu^2)
for the quadratic form, 0 for the linear form).  Both routes are exposed and
cross-checked in the tests.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, asdict

import numpy as np

from .errors import SingularityError, ValidationError
from .profiles import MassProfile
from .taylor import Jet, jet_exp, jet_tanh

__all__ = [
    "SgaCase",
    "YSolution",
    "CASE_TAGS",
    "fg_functions",
    "quantum_map",
    "nu_pair_from_rt",
    "solve_y",
    "generating_function",
    "generating_function_general",
    "effective_correction",
    "case_constant",
    "MATCHING_SCALE",
]

CASE_TAGS = ("A-exponential", "A-quadratic", "A-linear", "B-I", "B-II")

# Overall scale of the eigenfunction map between the two operator pictures.
# It cancels between the Hamiltonian side and the invariant-operator side of
# the matching identity, so no output depends on it; recorded for completeness.
MATCHING_SCALE = 1.0


@dataclass(frozen=True)
class SgaCase:
    """One matching configuration; validated against its case tag."""

    case_tag: str
    q: float
    b: float = 1.0
    delta: float = 1.0
    r0: float = 0.0
    t0: float = 0.0
    c0: float = 0.0
    a_r: float = 0.0
    a_t: float = 0.0
    a_c: float = 0.0
    p: int = 1

    def __post_init__(self):
        tag = self.case_tag
        if tag not in CASE_TAGS:
            raise ValidationError(f"unknown case tag {tag!r}")
        if self.b != 1.0:
            raise ValidationError("potential construction is carried out at b = 1")
        q_expected = 0.0 if tag.startswith("A") else 1.0
        if self.q != q_expected:
            raise ValidationError(f"{tag} requires q = {q_expected:g}")
        r0, t0, c0 = self.r0, self.t0, self.c0
        ok = {
            "A-exponential": r0 == 0 and t0 == 0 and c0 != 0,
            "A-quadratic": c0 == 0 and r0 == -t0 and r0 != 0,
            "A-linear": c0 == 0 and r0 == t0 and r0 != 0,
            "B-I": r0 == 0 and t0 == 0 and c0 != 0,
            "B-II": c0 == 0 and r0 == t0 and r0 != 0,
        }[tag]
        if not ok:
            raise ValidationError(f"(r0={r0}, t0={t0}, c0={c0}) violates the {tag} pattern")
        if self.p < 1 or self.p != int(self.p):
            raise ValidationError("p must be a positive integer")

    # energy-affine coefficients
    def r(self, E):
        return -self.r0 * E + self.a_r

    def t(self, E):
        return -self.t0 * E + self.a_t

    def c(self, E):
        return -self.c0 * E + self.a_c

    def to_json(self) -> dict:
        d = asdict(self)
        return {k: d[k] for k in
                ("q", "b", "delta", "r0", "t0", "c0", "a_r", "a_t", "a_c", "case_tag", "p")}

    @classmethod
    def from_json(cls, d: dict) -> "SgaCase":
        return cls(case_tag=d["case_tag"], q=d["q"], b=d.get("b", 1.0), delta=d["delta"],
                   r0=d["r0"], t0=d["t0"], c0=d["c0"], a_r=d["a_r"], a_t=d["a_t"],
                   a_c=d["a_c"], p=int(d.get("p", 1)))


@dataclass(frozen=True)
class YSolution:
    """Closed-form coordinate function y(mu) with exact jets through mu(x).

    form: "exponential" | "quadratic" | "linear" | "tanh-p"
    exponential:  y = prefactor * exp(-exponent_mult * alpha * mu)
    quadratic:    y = (alpha/4) mu^2
    linear:       y = alpha mu
    tanh-p:       y = tanh(alpha mu / (2p) + offset)
    """

    form: str
    alpha: float
    p: int = 1
    exponent_mult: float = 1.0
    prefactor: complex = 1.0
    offset: complex = 0.0

    def __post_init__(self):
        if self.form not in ("exponential", "quadratic", "linear", "tanh-p"):
            raise ValidationError(f"unknown y form {self.form!r}")
        if self.alpha <= 0:
            raise ValidationError("alpha must be positive")

    def y_of_mu(self, mu):
        mu = np.asarray(mu, dtype=float)
        if self.form == "exponential":
            return self.prefactor * np.exp(-self.exponent_mult * self.alpha * mu)
        if self.form == "quadratic":
            return (self.alpha / 4.0) * mu * mu
        if self.form == "linear":
            return self.alpha * mu
        return np.tanh(self.alpha * mu / (2.0 * self.p) + self.offset)

    def jet_of_mu_jet(self, mu_jet: Jet) -> Jet:
        if self.form == "exponential":
            return self.prefactor * jet_exp((-self.exponent_mult * self.alpha) * mu_jet)
        if self.form == "quadratic":
            return (self.alpha / 4.0) * (mu_jet * mu_jet)
        if self.form == "linear":
            return self.alpha * mu_jet
        return jet_tanh((self.alpha / (2.0 * self.p)) * mu_jet + self.offset)

    def jet_on(self, profile: MassProfile, x, order: int) -> Jet:
        return self.jet_of_mu_jet(profile.mu_jet(np.asarray(x, dtype=float), order))

    @property
    def rate(self) -> float:
        """Exponential decay rate (exponential form) or tanh argument rate."""
        if self.form == "exponential":
            return self.exponent_mult * self.alpha
        if self.form == "tanh-p":
            return self.alpha / self.p
        return 0.0

    @property
    def label(self) -> str:
        bits = [f"{self.form}:alpha={self.alpha:g}"]
        if self.form == "tanh-p":
            bits.append(f"p={self.p}")
        if self.exponent_mult != 1.0:
            bits.append(f"x{self.exponent_mult:g}")
        if self.prefactor != 1.0:
            bits.append("rotated")
        if self.offset != 0:
            bits.append("shifted")
        return ",".join(bits)


def fg_functions(q: float, b: float, delta: float, y):
    """Ladder weight functions (F, G) at the value(s) y.

    F, G = (4q/sqrt(b) + b delta^2)/(1 - q y^2/sqrt(b))^2
           +/- 2 b delta sqrt(b) (1 + q y^2/sqrt(b)) / (y (1 - q y^2/sqrt(b))^2)
    """
    y = np.asarray(y, dtype=complex if np.iscomplexobj(y) else float)
    sb = math.sqrt(b) if b > 0 else cmath.sqrt(b)
    u = q * y * y / sb
    denom = (1.0 - u) ** 2
    if np.any(np.abs(1.0 - u) < 1e-14):
        raise SingularityError("q y^2 = sqrt(b): ladder weights have a pole there")
    if delta != 0 and np.any(np.abs(y) < 1e-300):
        raise SingularityError("y = 0: ladder weights have a pole there")
    sym = (4.0 * q / sb + b * delta**2) / denom
    if delta == 0:
        anti = np.zeros_like(sym)
    else:
        anti = 2.0 * b * delta * sb * (1.0 + u) / (y * denom)
    F, G = sym + anti, sym - anti
    if np.isscalar(F) or F.ndim == 0:
        return float(np.real(F)), float(np.real(G))
    return F, G


def quantum_map(nu: float, nu_prime: float):
    """(nu, nu') -> (r, t) = ((nu+nu')^2, (nu-nu')^2)."""
    return (nu + nu_prime) ** 2, (nu - nu_prime) ** 2


def nu_pair_from_rt(r: float, t: float):
    """Inverse map, defined for nonnegative (r, t) with the positive roots."""
    if r < 0 or t < 0:
        raise ValidationError("inverse quantum map is used with nonnegative (r, t) only")
    sr, st = math.sqrt(r), math.sqrt(t)
    return 0.5 * (sr + st), 0.5 * (sr - st)


def solve_y(case: SgaCase, variant: str = "principal") -> YSolution:
    """Closed-form y for a case; variants select the alternate members.

    B-I variants: "principal" (rate alpha), "double-exponent" (rate 2 alpha
    with alpha redefined to sqrt(2/c0)), "imaginary-offset" (prefactor i).
    B-II variants: "principal", "quarter-turn" (offset i pi/4).
    """
    tag = case.case_tag
    if tag in ("A-exponential", "B-I"):
        if case.c0 <= 0:
            raise ValidationError("exponential solutions need c0 > 0 for a real decay rate")
        if variant == "principal" or tag == "A-exponential":
            return YSolution(form="exponential", alpha=2.0 * math.sqrt(2.0 / case.c0))
        if variant == "double-exponent":
            return YSolution(form="exponential", alpha=math.sqrt(2.0 / case.c0), exponent_mult=2.0)
        if variant == "imaginary-offset":
            return YSolution(form="exponential", alpha=2.0 * math.sqrt(2.0 / case.c0), prefactor=1j)
        raise ValidationError(f"unknown B-I variant {variant!r}")
    if tag == "A-quadratic":
        return YSolution(form="quadratic", alpha=2.0 / (case.delta * case.r0))
    if tag == "A-linear":
        if case.r0 <= 0:
            raise ValidationError("the linear solution needs r0 > 0")
        return YSolution(form="linear", alpha=2.0 / (case.delta * math.sqrt(case.r0)))
    # B-II
    denom = case.r0 * (4.0 + case.delta**2)
    if denom <= 0:
        raise ValidationError("tanh solutions need r0 (4 + delta^2) > 0")
    alpha = 4.0 * case.p / math.sqrt(denom)
    if variant == "principal":
        return YSolution(form="tanh-p", alpha=alpha, p=case.p)
    if variant == "quarter-turn":
        return YSolution(form="tanh-p", alpha=alpha, p=case.p, offset=0.25j * math.pi)
    raise ValidationError(f"unknown B-II variant {variant!r}")


def generating_function(case: SgaCase, y: YSolution, profile: MassProfile, x):
    """S(x) in the case-reduced closed form (removable poles cancelled)."""
    x = np.asarray(x, dtype=float)
    yv = y.y_of_mu(profile.mu(x))
    tag = case.case_tag
    if tag in ("A-exponential", "B-I"):
        # the ladder-weight terms drop out at r0 = t0 = 0, for either q
        out = 8.0 * yv * yv / case.c0
    elif tag == "A-quadratic":
        out = 2.0 * yv / (case.delta * case.r0)
    elif tag == "A-linear":
        out = np.full_like(np.real(yv), 4.0 / (case.delta**2 * case.r0))
    else:
        out = 4.0 * (1.0 - yv * yv) ** 2 / (case.r0 * (4.0 + case.delta**2))
    return np.real_if_close(out, tol=4) if np.iscomplexobj(out) else out


def generating_function_general(case: SgaCase, y_values):
    """S from the unreduced master expression 8 y^2/(r0 F y^2 + t0 G y^2 + c0).

    Cross-check route; poles that the reduced forms cancel are left in place.
    """
    yv = np.asarray(y_values)
    F, G = fg_functions(case.q, case.b, case.delta, yv)
    denom = case.r0 * F * yv**2 + case.t0 * G * yv**2 + case.c0
    if np.any(np.abs(denom) < 1e-14):
        raise SingularityError("master-form denominator vanishes")
    return 8.0 * yv**2 / denom


def case_constant(y: YSolution, mu=None):
    """The case term by which the y-form correction exceeds the mu-form one.

    exponential / tanh-p: rate^2/8 (a number); quadratic: 3/(8 mu^2)
    (needs mu); linear: 0.
    """
    if y.form in ("exponential", "tanh-p"):
        return y.rate**2 / 8.0
    if y.form == "quadratic":
        if mu is None:
            raise ValidationError("quadratic case constant needs mu")
        return 3.0 / (8.0 * np.asarray(mu) ** 2)
    return 0.0


def effective_correction(profile: MassProfile, eta: float, eps: float,
                         y: YSolution | None, x, variant: str = "U_eff"):
    """Ordering-dependent effective potential on the x grid.

    variant="U_eff": the mu-derivative form (independent of y),
        [2 eta^2 + 2 eta(1+eps) + 3 eps/2 + 7/8] mu''^2/mu'^4
        - (1+2 eps)/4 * mu'''/mu'^3.
    variant="V_eff": the y-form
        (3/8m)(y''/y')^2 - (1/4m)(y'''/y')
        + (m'^2/8m^3)[(1+2 eta)^2 + 4 eps(1+eta)] - eps m''/(4 m^2).

    Both vanish for constant mass up to the case constant: V_eff = U_eff +
    case_constant(y).
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if variant == "U_eff":
        mu = profile.mu_jet(x, 3)
        mp1, mp2, mp3 = mu.deriv(1).values, mu.deriv(2).values, mu.deriv(3).values
        coeff = 2.0 * eta**2 + 2.0 * eta * (1.0 + eps) + 1.5 * eps + 0.875
        return coeff * mp2**2 / mp1**4 - 0.25 * (1.0 + 2.0 * eps) * mp3 / mp1**3
    if variant != "V_eff":
        raise ValidationError(f"unknown correction variant {variant!r}")
    if y is None:
        raise ValidationError("the y-form correction needs a YSolution")
    yj = y.jet_on(profile, x, 3)
    mj = profile.m_jet(x, 2)
    m, m1, m2 = mj.values, mj.deriv(1).values, mj.deriv(2).values
    y1, y2, y3 = yj.deriv(1).values, yj.deriv(2).values, yj.deriv(3).values
    bracket = (1.0 + 2.0 * eta) ** 2 + 4.0 * eps * (1.0 + eta)
    out = (
        (3.0 / (8.0 * m)) * (y2 / y1) ** 2
        - (1.0 / (4.0 * m)) * (y3 / y1)
        + (m1**2 / (8.0 * m**3)) * bracket
        - eps * m2 / (4.0 * m**2)
    )
    return np.real_if_close(out, tol=16) if np.iscomplexobj(out) else out

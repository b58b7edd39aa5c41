"""Catalog of the thirteen solvable potentials, as functions of mu.

Every entry pairs a closed-form evaluator V(mu) with its analytic energy
formula and the metadata the verification harness needs: the natural mu
domain (decided by the entry's actual singularity structure), the bound
threshold (asymptotic potential value), the quantum-number scheme, and the
matching-case linkage that selects the ordering correction.

Hyperbolic entries and their trigonometric versions are separate ids; the
trig branch is implemented with real closed forms (alpha -> i alpha, and
delta -> -i delta for the cot family, worked out analytically), never by
complex arithmetic on the hyperbolic branch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, SingularityError, ValidationError
from .matching import YSolution, case_constant, effective_correction
from .profiles import MassProfile

__all__ = [
    "PotentialModel",
    "EnergySpec",
    "POTENTIAL_IDS",
    "make_potential",
    "eval_V",
    "analytic_energy",
    "invert_energy",
    "isospectral_pairs",
    "catalog_listing",
]

POTENTIAL_IDS = (
    "morse", "oscillator3d", "coulomb3d",
    "gpt", "gpt_trig", "pt", "pt_trig",
    "scarf2", "scarf2_trig",
    "eckart", "eckart_trig", "hulthen", "rosen_morse",
)

_FULL = (-math.inf, math.inf)


def _csch(z):
    return 1.0 / np.sinh(z)


def _sech(z):
    return 1.0 / np.cosh(z)


@dataclass(frozen=True)
class EnergySpec:
    """Quantum-number scheme attached to a catalog entry.

    scheme: "lambda" (single invariant-operator label), "nu-pair"
    ((nu, nu') of the two compact generators), or "reduced-n" (the entry's
    reduced combination of the pair).
    """

    scheme: str
    inputs: tuple


@dataclass(frozen=True)
class PotentialModel:
    """One catalog entry bound to concrete parameter values."""

    id: str
    params: dict
    case: dict
    mu_domain: tuple
    value_type: str
    energy: EnergySpec
    formula: str = ""
    _singular_points: tuple = field(default=())

    def __call__(self, mu):
        return eval_V(self, mu)

    @property
    def is_complex(self) -> bool:
        return self.value_type == "complex"


# ---------------------------------------------------------------------------
# parameter schemas and validation
# ---------------------------------------------------------------------------

_SCHEMAS = {
    "morse": ("alpha", "A", "B"),
    "oscillator3d": ("omega", "lam"),
    "coulomb3d": ("Ze2", "lam"),
    "gpt": ("alpha", "delta", "a_r", "a_t"),
    "gpt_trig": ("alpha", "delta", "a_r", "a_t"),
    "pt": ("alpha", "delta", "a_r", "a_t"),
    "pt_trig": ("alpha", "delta", "a_r", "a_t"),
    "scarf2": ("alpha", "delta", "a_r", "a_t"),
    "scarf2_trig": ("alpha", "delta", "a_r", "a_t"),
    "eckart": ("alpha", "delta", "a_t", "lam"),
    "eckart_trig": ("alpha", "delta", "a_t", "lam"),
    "hulthen": ("alpha", "delta", "lam", "nu", "nu_prime"),
    "rosen_morse": ("alpha", "delta", "a_r", "a_t", "lam"),
}

_SCHEMES = {
    "morse": "lambda", "gpt": "lambda", "gpt_trig": "lambda",
    "pt": "lambda", "pt_trig": "lambda", "scarf2": "lambda", "scarf2_trig": "lambda",
    "oscillator3d": "reduced-n", "coulomb3d": "reduced-n",
    "eckart": "nu-pair", "eckart_trig": "nu-pair",
    "hulthen": "nu-pair", "rosen_morse": "nu-pair",
}

_FORMULAS = {
    "morse": "B^2 e^(-2 a mu) - B (2A + a) e^(-a mu)",
    "oscillator3d": "w^2 mu^2 / 4 + (3 + 4 L (L+2)) / (8 mu^2)",
    "coulomb3d": "-Ze2 / mu + L (L+2) / (8 mu^2)",
    "gpt": "a^2/32 [(4+d^2)(a_r+a_t) - 4] csch^2(a mu) + d a^2/8 (a_r-a_t) csch coth",
    "gpt_trig": "a^2/32 [(4+d^2)(a_r+a_t) - 4] csc^2(a mu) + d a^2/8 (a_r-a_t) csc cot",
    "pt": "-a^2/32 [(d+2)^2 a_t + (d-2)^2 a_r - 4] sech^2 + a^2/32 [(d+2)^2 a_r + (d-2)^2 a_t - 4] csch^2",
    "pt_trig": "a^2/32 [(d+2)^2 a_t + (d-2)^2 a_r - 4] sec^2 + a^2/32 [(d+2)^2 a_r + (d-2)^2 a_t - 4] csc^2",
    "scarf2": "-a^2/32 [(4+d^2)(a_r+a_t) - 4] sech^2 + i d a^2/8 (a_r-a_t) sech tanh",
    "scarf2_trig": "a^2/32 [(4+d^2)(a_r+a_t) - 4] sec^2 + d a^2/8 (a_r-a_t) sec tan",
    "eckart": "-d a^2 a_t/4 coth(a mu) + a^2 L(L+2)/8 csch^2(a mu)",
    "eckart_trig": "-d a^2 a_t/4 cot(a mu) + a^2 L(L+2)/8 csc^2(a mu)",
    "hulthen": "a^2/4 [L(L+2) + d nu nu'/2] e^(-a mu)/(2(1-e^(-a mu))) + a^2/4 L(L+2) e^(-2 a mu)/(2(1-e^(-a mu))^2)",
    "rosen_morse": "d a^2/8 (a_r-a_t) tanh(a mu) - a^2/8 L(L+2) sech^2(a mu)",
}


def _require(cond, msg):
    if not cond:
        raise ValidationError(msg)


def make_potential(id: str, params: dict) -> PotentialModel:
    """Build a catalog entry after validating its parameters.

    Parameters are a named map; see catalog_listing() for each id's schema.
    alpha > 0 everywhere it appears; Morse needs B > 0; the oscillator needs
    omega > 0; the Coulomb entry needs Ze2 > 0; hulthen needs the full
    (lam, nu, nu_prime) trio.
    """
    if id not in POTENTIAL_IDS:
        raise ValidationError(f"unknown potential id {id!r}")
    schema = _SCHEMAS[id]
    unknown = set(params) - set(schema)
    if unknown:
        raise ValidationError(f"{id}: unknown parameter(s) {sorted(unknown)}")
    missing = set(schema) - set(params)
    if missing:
        raise ValidationError(f"{id}: missing parameter(s) {sorted(missing)}")
    p = {k: float(v) for k, v in params.items()}

    if "alpha" in p:
        _require(p["alpha"] > 0, f"{id}: alpha must be positive, got {p['alpha']}")
    if id == "morse":
        _require(p["B"] >= 0, f"morse: B must be nonnegative, got {p['B']}")
    if id == "oscillator3d":
        _require(p["omega"] > 0, f"oscillator3d: omega must be positive, got {p['omega']}")
    if id == "coulomb3d":
        _require(p["Ze2"] > 0, f"coulomb3d: Ze2 must be positive, got {p['Ze2']}")

    a = p.get("alpha", 0.0)
    mu_domain, singular = _natural_domain(id, p, a)
    case = _case_linkage(id)
    value_type = "complex" if id == "scarf2" else "real"
    return PotentialModel(
        id=id, params=p, case=case, mu_domain=mu_domain, value_type=value_type,
        energy=EnergySpec(scheme=_SCHEMES[id], inputs=_scheme_inputs(id)),
        formula=_FORMULAS[id], _singular_points=singular,
    )


def _scheme_inputs(id):
    return {
        "lambda": ("lam",),
        "nu-pair": ("nu", "nu_prime"),
        "reduced-n": ("n",) if id == "oscillator3d" else ("N",),
    }[_SCHEMES[id]]


def _natural_domain(id, p, a):
    """Domain from the singularity structure of the concrete entry."""
    if id == "morse":
        return _FULL, ()
    if id in ("oscillator3d", "coulomb3d", "gpt", "eckart", "hulthen"):
        return (0.0, math.inf), (0.0,)
    if id == "scarf2" or id == "rosen_morse":
        return _FULL, ()
    if id == "pt":
        csch_coeff = (p["delta"] + 2) ** 2 * p["a_r"] + (p["delta"] - 2) ** 2 * p["a_t"] - 4.0
        if abs(csch_coeff) < 1e-13:
            return _FULL, ()
        return (0.0, math.inf), (0.0,)
    if id in ("gpt_trig", "eckart_trig"):
        return (0.0, math.pi / a), (0.0, math.pi / a)
    if id == "pt_trig":
        return (0.0, 0.5 * math.pi / a), (0.0, 0.5 * math.pi / a)
    if id == "scarf2_trig":
        return (-0.5 * math.pi / a, 0.5 * math.pi / a), (-0.5 * math.pi / a, 0.5 * math.pi / a)
    raise AssertionError(id)


def _case_linkage(id):
    if id in ("morse",):
        return {"q": 0, "b": 1, "family": "A-exponential"}
    if id == "oscillator3d":
        return {"q": 0, "b": 1, "family": "A-quadratic"}
    if id == "coulomb3d":
        return {"q": 0, "b": 1, "family": "A-linear"}
    if id in ("gpt", "gpt_trig", "pt", "pt_trig", "scarf2", "scarf2_trig"):
        return {"q": 1, "b": 1, "family": "B-I"}
    if id == "hulthen":
        return {"q": 1, "b": 1, "p": 2, "family": "B-II"}
    return {"q": 1, "b": 1, "p": 1, "family": "B-II"}


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

def eval_V(model: PotentialModel, mu):
    """Potential value(s) at mu; complex for the scarf2 entry."""
    scalar = np.isscalar(mu)
    mu = np.atleast_1d(np.asarray(mu, dtype=float))
    lo, hi = model.mu_domain
    if np.any(mu <= lo) or np.any(mu >= hi):
        raise DomainError(f"{model.id}: mu outside the natural domain ({lo:g}, {hi:g})")
    for s in model._singular_points:
        if np.any(np.abs(mu - s) < 1e-13):
            raise SingularityError(f"{model.id}: mu = {s:g} is a singular point", location=s)
    out = _EVALUATORS[model.id](model.params, mu)
    return out[0] if scalar else out


def _v_morse(p, mu):
    a, A, B = p["alpha"], p["A"], p["B"]
    e = np.exp(-a * mu)
    return B * B * e * e - B * (2.0 * A + a) * e


def _v_oscillator(p, mu):
    w, lam = p["omega"], p["lam"]
    return 0.25 * w * w * mu * mu + (3.0 + 4.0 * lam * (lam + 2.0)) / (8.0 * mu * mu)


def _v_coulomb(p, mu):
    return -p["Ze2"] / mu + p["lam"] * (p["lam"] + 2.0) / (8.0 * mu * mu)


def _gpt_coeffs(p):
    a, d = p["alpha"], p["delta"]
    c_sym = a * a / 32.0 * ((4.0 + d * d) * (p["a_r"] + p["a_t"]) - 4.0)
    c_anti = d * a * a / 8.0 * (p["a_r"] - p["a_t"])
    return c_sym, c_anti


def _v_gpt(p, mu):
    c1, c2 = _gpt_coeffs(p)
    z = p["alpha"] * mu
    return c1 * _csch(z) ** 2 + c2 * _csch(z) / np.tanh(z)


def _v_gpt_trig(p, mu):
    c1, c2 = _gpt_coeffs(p)
    z = p["alpha"] * mu
    return c1 / np.sin(z) ** 2 + c2 * np.cos(z) / np.sin(z) ** 2


def _pt_coeffs(p):
    a, d = p["alpha"], p["delta"]
    c_sech = a * a / 32.0 * ((d + 2.0) ** 2 * p["a_t"] + (d - 2.0) ** 2 * p["a_r"] - 4.0)
    c_csch = a * a / 32.0 * ((d + 2.0) ** 2 * p["a_r"] + (d - 2.0) ** 2 * p["a_t"] - 4.0)
    return c_sech, c_csch


def _v_pt(p, mu):
    c_sech, c_csch = _pt_coeffs(p)
    z = p["alpha"] * mu
    return -c_sech * _sech(z) ** 2 + c_csch * _csch(z) ** 2


def _v_pt_trig(p, mu):
    c_sech, c_csch = _pt_coeffs(p)
    z = p["alpha"] * mu
    return c_sech / np.cos(z) ** 2 + c_csch / np.sin(z) ** 2


def _v_scarf2(p, mu):
    c1, c2 = _gpt_coeffs(p)
    z = p["alpha"] * mu
    return -c1 * _sech(z) ** 2 + 1j * c2 * _sech(z) * np.tanh(z)


def _v_scarf2_trig(p, mu):
    # real closed form of the alpha -> i alpha continuation of the scarf2 entry
    c1, c2 = _gpt_coeffs(p)
    z = p["alpha"] * mu
    return c1 / np.cos(z) ** 2 + c2 * np.tan(z) / np.cos(z)


def _v_eckart(p, mu):
    a, d, lam = p["alpha"], p["delta"], p["lam"]
    z = a * mu
    return -d * a * a * p["a_t"] / 4.0 / np.tanh(z) + a * a * lam * (lam + 2.0) / 8.0 * _csch(z) ** 2


def _v_eckart_trig(p, mu):
    a, d, lam = p["alpha"], p["delta"], p["lam"]
    z = a * mu
    return -d * a * a * p["a_t"] / 4.0 / np.tan(z) + a * a * lam * (lam + 2.0) / 8.0 / np.sin(z) ** 2


def _v_hulthen(p, mu):
    a, d, lam = p["alpha"], p["delta"], p["lam"]
    ll = lam * (lam + 2.0)
    e = np.exp(-a * mu)
    return (a * a / 4.0) * (ll + d * p["nu"] * p["nu_prime"] / 2.0) * e / (2.0 * (1.0 - e)) \
        + (a * a / 4.0) * ll * e * e / (2.0 * (1.0 - e) ** 2)


def _v_rosen_morse(p, mu):
    a, d, lam = p["alpha"], p["delta"], p["lam"]
    z = a * mu
    return d * a * a / 8.0 * (p["a_r"] - p["a_t"]) * np.tanh(z) \
        - a * a / 8.0 * lam * (lam + 2.0) * _sech(z) ** 2


_EVALUATORS = {
    "morse": _v_morse, "oscillator3d": _v_oscillator, "coulomb3d": _v_coulomb,
    "gpt": _v_gpt, "gpt_trig": _v_gpt_trig, "pt": _v_pt, "pt_trig": _v_pt_trig,
    "scarf2": _v_scarf2, "scarf2_trig": _v_scarf2_trig,
    "eckart": _v_eckart, "eckart_trig": _v_eckart_trig,
    "hulthen": _v_hulthen, "rosen_morse": _v_rosen_morse,
}


# ---------------------------------------------------------------------------
# analytic energies and their inversions
# ---------------------------------------------------------------------------

def analytic_energy(model: PotentialModel, **qn) -> float:
    """The entry's closed-form energy at the given quantum numbers.

    lambda scheme: analytic_energy(m, lam=...); nu-pair scheme:
    analytic_energy(m, nu=..., nu_prime=...); reduced scheme:
    analytic_energy(m, n=...) or (m, N=...).
    """
    id, p = model.id, model.params
    scheme = model.energy.scheme
    if scheme == "lambda":
        if set(qn) != {"lam"}:
            raise ValidationError(f"{id} uses the lambda scheme: pass lam=...")
        lam = qn["lam"]
        a2 = p["alpha"] ** 2
        core = (1.0 + lam) ** 2
        return {
            "morse": -a2 / 8.0 * core,
            "gpt": -a2 / 8.0 * core,
            "gpt_trig": a2 / 8.0 * core,
            "pt": -a2 / 2.0 * core,
            "pt_trig": a2 / 2.0 * core,
            "scarf2": -a2 / 8.0 * core,
            "scarf2_trig": a2 / 8.0 * core,
        }[id]
    if scheme == "nu-pair":
        if set(qn) != {"nu", "nu_prime"}:
            raise ValidationError(f"{id} uses the nu-pair scheme: pass nu=..., nu_prime=...")
        nu, nup = qn["nu"], qn["nu_prime"]
        a2, d = p["alpha"] ** 2, p["delta"]
        ss = nu * nu + nup * nup
        if id == "eckart" or id == "rosen_morse":
            return -a2 / 16.0 * (4.0 + d * d) * ss
        if id == "eckart_trig":
            return a2 / 16.0 * (4.0 - d * d) * ss
        return -a2 / 16.0 * ((4.0 + d * d) * ss + 4.0 * d * nu * nup)  # hulthen
    # reduced-n
    if id == "oscillator3d":
        if set(qn) != {"n"}:
            raise ValidationError("oscillator3d uses the reduced scheme: pass n=...")
        return 2.0 * p["omega"] * qn["n"]
    if set(qn) != {"N"}:
        raise ValidationError("coulomb3d uses the reduced scheme: pass N=...")
    return -((p["Ze2"] / (2.0 * qn["N"])) ** 2)


def invert_energy(model: PotentialModel, E: float) -> float:
    """Level coordinate from an energy: the scalar the spacing fits act on.

    lambda scheme: lam = sqrt(-8E)/alpha - 1 (or the entry's own prefactor);
    reduced schemes: n = E/(2 omega), N = Ze2/(2 sqrt(-E)); nu-pair entries:
    s = nu^2 + nu'^2 = -16 E / (alpha^2 (4 + delta^2)).
    """
    id, p = model.id, model.params
    if model.energy.scheme == "lambda":
        pref = {"morse": 8.0, "gpt": 8.0, "scarf2": 8.0, "pt": 2.0,
                "gpt_trig": -8.0, "scarf2_trig": -8.0, "pt_trig": -2.0}[id]
        val = pref * -E
        if val < 0:
            raise ValidationError(f"{id}: energy {E:g} outside the invertible branch")
        return math.sqrt(val) / p["alpha"] - 1.0
    if id == "oscillator3d":
        return E / (2.0 * p["omega"])
    if id == "coulomb3d":
        if E >= 0:
            raise ValidationError("coulomb3d: bound energies are negative")
        return p["Ze2"] / (2.0 * math.sqrt(-E))
    sgn = -1.0 if id != "eckart_trig" else 1.0
    return 16.0 * sgn * E / (p["alpha"] ** 2 * (4.0 + (p["delta"] ** 2 if id != "eckart_trig" else -p["delta"] ** 2)))


def isospectral_pairs():
    """The two catalog pairs that share an energy formula."""
    return [("gpt", "scarf2"), ("eckart", "rosen_morse")]


# ---------------------------------------------------------------------------
# harness metadata
# ---------------------------------------------------------------------------

def bound_threshold(model: PotentialModel) -> float:
    """Continuum edge: the lowest asymptotic potential value."""
    id, p = model.id, model.params
    if id in ("morse", "gpt", "pt", "scarf2", "hulthen", "coulomb3d"):
        return 0.0
    if id == "oscillator3d":
        return math.inf
    if id == "eckart":
        return -p["delta"] * p["alpha"] ** 2 * p["a_t"] / 4.0
    if id == "rosen_morse":
        return -abs(p["delta"] * p["alpha"] ** 2 * (p["a_r"] - p["a_t"]) / 8.0)
    return math.inf  # trig entries live in bounded boxes: purely discrete


def ordering_correction(model: PotentialModel, profile: MassProfile,
                        eta: float, eps: float, x):
    """The (eta, eps)-dependent effective-potential correction on the x grid.

    Exponential-family entries use the mu-derivative form directly; the
    quadratic, linear and tanh families evaluate the y-form and subtract the
    case term that is already part of the catalog potential.  The two routes
    agree analytically and are cross-checked in the tests.
    """
    fam = model.case["family"]
    if fam in ("A-exponential", "B-I"):
        return effective_correction(profile, eta, eps, None, x, variant="U_eff")
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if fam == "A-quadratic":
        y = YSolution(form="quadratic", alpha=1.0)
        c = case_constant(y, mu=profile.mu(x))
    elif fam == "A-linear":
        y = YSolution(form="linear", alpha=1.0)
        c = 0.0
    else:  # B-II: y = tanh(alpha mu / 2p) with the entry's own alpha
        pp = model.case.get("p", 1)
        y = YSolution(form="tanh-p", alpha=model.params["alpha"], p=pp)
        c = case_constant(y)
    return effective_correction(profile, eta, eps, y, x, variant="V_eff") - c


def catalog_listing() -> dict:
    """Machine-readable catalog: schema, domain, scheme and formula per id."""
    out = {}
    for id in POTENTIAL_IDS:
        dom = {
            "morse": "full-line", "scarf2": "full-line", "rosen_morse": "full-line",
            "oscillator3d": "half-line", "coulomb3d": "half-line", "gpt": "half-line",
            "pt": "half-line (full when the csch^2 coefficient vanishes)",
            "eckart": "half-line", "hulthen": "half-line",
            "gpt_trig": "bounded (0, pi/alpha)", "eckart_trig": "bounded (0, pi/alpha)",
            "pt_trig": "bounded (0, pi/(2 alpha))",
            "scarf2_trig": "bounded (-pi/(2 alpha), pi/(2 alpha))",
        }[id]
        out[id] = {
            "params": list(_SCHEMAS[id]),
            "mu_domain": dom,
            "energy_scheme": _SCHEMES[id],
            "energy_inputs": list(_scheme_inputs(id)),
            "value_type": "complex" if id == "scarf2" else "real",
            "formula": _FORMULAS[id],
        }
    return out

"""Upper bound for ``|a2 a4 - a3^2|`` and the numerical check of how it is reached.

With ``c = |c1|``, ``nu = |x|``, ``mu = |y|`` the Hankel functional is
majorized by ``B1 |tau|^2 F(nu, mu)`` where

    F(nu, mu) = T1 + (nu + mu) T2 + (nu^2 + mu^2) T3 + (nu + mu)^2 T4

and ``T1..T4`` depend on ``c``.  Taking ``F(1, 1)`` and then ``c = 1`` gives
``B1 |tau|^2 (P + Q + R)``.  :func:`verify_max_structure` checks the first of
these steps numerically instead of trusting it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, asdict

import numpy as np

from .minda import ClassParams, PhiSpec, ValidationError, resolve_phi

CORNER_TOL = 1e-9


@dataclass(frozen=True)
class TTerms:
    c: float
    t1: float
    t2: float
    t3: float
    t4: float

    @property
    def theta(self) -> float:
        """``-(T3 + T4)``; positive exactly when the boundary slices are concave."""
        return -(self.t3 + self.t4)

    @property
    def corner(self) -> float:
        return self.t1 + 2 * self.t2 + 2 * self.t3 + 4 * self.t4


def _c3_gap(params: ClassParams, phi: PhiSpec) -> float:
    # |B3/(d2 d4) - B1^3 tau^2 / d2^4|, the only place tau enters other than |tau|
    B1, _, B3 = phi.coefficients
    return abs(B3 / (params.d2 * params.d4) - B1**3 * params.tau**2 / params.d2**4)


def t_terms(params: ClassParams, phi: PhiSpec, c: float) -> TTerms:
    if not 0.0 <= c <= 1.0:
        raise ValidationError(f"c must lie in [0, 1], got {c}")
    B1, B2, _ = phi.coefficients
    d2, d3, d4 = params.d2, params.d3, params.d4
    s = 1 + c * c
    t1 = _c3_gap(params, phi) * c**4 + B1 * c * s / (d2 * d4)
    t2 = c * c * s / d2 * (B1**2 * abs(params.tau) / (4 * d2 * d3) + abs(B2) / d4)
    t3 = B1 * c * (c - 1) * s / (2 * d2 * d4)
    t4 = B1 * s * s / (4 * d3 * d3)
    return TTerms(float(c), t1, t2, t3, t4)


def surface_F(terms: TTerms, nu, mu):
    """The majorant ``F(nu, mu)`` on the unit square (broadcasts over arrays)."""
    nu = np.asarray(nu, dtype=float)
    mu = np.asarray(mu, dtype=float)
    if np.any((nu < 0) | (nu > 1) | (mu < 0) | (mu > 1)):
        raise ValidationError("(nu, mu) must lie in [0, 1]^2")
    s = nu + mu
    val = terms.t1 + s * terms.t2 + (nu * nu + mu * mu) * terms.t3 + s * s * terms.t4
    return float(val) if val.ndim == 0 else val


def edge_slice_zero(terms: TTerms, mu):
    """``F(0, mu)``."""
    return surface_F(terms, 0.0, mu)


def edge_slice_one(terms: TTerms, mu):
    """``F(1, mu)``."""
    return surface_F(terms, 1.0, mu)


def pqr(params: ClassParams, phi: PhiSpec) -> tuple[float, float, float]:
    B1, B2, _ = phi.coefficients
    d2, d3, d4 = params.d2, params.d3, params.d4
    tau_abs = abs(params.tau)
    shared = (B1 + 2 * abs(B2)) / (d2 * d4) + B1**2 * tau_abs / (2 * d2**2 * d3)
    R = B1 / d3**2
    P = _c3_gap(params, phi) + R + shared
    Q = shared + 2 * R
    return P, Q, R


def omega(params: ClassParams, phi: PhiSpec, c):
    """``B1 |tau|^2 F(1, 1)`` as a function of ``c``, in the ``P c^4 + Q c^2 + R`` form."""
    P, Q, R = pqr(params, phi)
    t = np.asarray(c, dtype=float) ** 2
    out = phi.B1 * abs(params.tau) ** 2 * (P * t * t + Q * t + R)
    return float(out) if out.ndim == 0 else out


@dataclass
class MaxRecord:
    c: float
    argmax: list[float]
    max: float
    corner: float
    t3_plus_t4: float
    t3_plus_2t4: float
    discriminant: float
    flagged: bool


@dataclass
class MaxReport:
    records: list[MaxRecord]
    tol: float = CORNER_TOL

    @property
    def flagged(self) -> list[MaxRecord]:
        return [r for r in self.records if r.flagged]

    def to_dict(self) -> dict:
        return {"tol": self.tol, "records": [asdict(r) for r in self.records],
                "n_flagged": len(self.flagged)}


@dataclass
class BoundBreakdown:
    params: ClassParams
    phi: PhiSpec
    p: float
    q: float
    r: float
    bound: float
    profile: list[TTerms] = field(default_factory=list)
    maximizer: MaxReport | None = None

    def to_dict(self) -> dict:
        tau = complex(self.params.tau)
        out = {
            "tau": [tau.real, tau.imag], "lambda": self.params.lam, "delta": self.params.delta,
            "phi": self.phi.to_string(), "B1": self.phi.B1, "B2": self.phi.B2, "B3": self.phi.B3,
            "P": self.p, "Q": self.q, "R": self.r, "bound": self.bound,
            "profile": [asdict(t) for t in self.profile],
        }
        if self.maximizer is not None:
            out["maximizer"] = self.maximizer.to_dict()
        return out


def theorem_bound(params: ClassParams, phi: PhiSpec, c_steps: int = 11,
                  verify: bool = False, **verify_kw) -> BoundBreakdown:
    P, Q, R = pqr(params, phi)
    bound = phi.B1 * abs(params.tau) ** 2 * (P + Q + R)
    profile = [t_terms(params, phi, c) for c in np.linspace(0.0, 1.0, c_steps)] if c_steps else []
    report = verify_max_structure(params, phi, **verify_kw) if verify else None
    return BoundBreakdown(params, phi, P, Q, R, bound, profile, report)


def _analytic_candidates(terms: TTerms) -> list[tuple[float, float]]:
    """Corners, edge stationary points and the interior stationary point of ``F``."""
    pts = [(1.0, 1.0), (0.0, 0.0), (0.0, 1.0), (1.0, 0.0)]
    theta = terms.theta
    if theta > 0:
        m0 = terms.t2 / (2 * theta)
        m1 = (terms.t2 + 2 * terms.t4) / (2 * theta)
        if 0 <= m0 <= 1:
            pts += [(0.0, m0), (m0, 0.0)]
        if 0 <= m1 <= 1:
            pts += [(1.0, m1), (m1, 1.0)]
    # grad F = 0:  (2T3 + 2T4) nu + 2T4 mu = -T2 and its mirror; symmetric
    # system, so the stationary point sits on the diagonal
    s = 2 * terms.t3 + 4 * terms.t4
    if s != 0:
        v = -terms.t2 / s
        if 0 <= v <= 1:
            pts.append((v, v))
    return pts


def _grid_max(terms: TTerms, grid: int, refine_rounds: int) -> tuple[float, float, float]:
    lo_n, hi_n, lo_m, hi_m = 0.0, 1.0, 0.0, 1.0
    best = (-math.inf, 1.0, 1.0)
    for rnd in range(refine_rounds + 1):
        nus = np.linspace(lo_n, hi_n, grid)
        mus = np.linspace(lo_m, hi_m, grid)
        vals = surface_F(terms, nus[:, None], mus[None, :])
        i, j = np.unravel_index(np.argmax(vals), vals.shape)
        if vals[i, j] > best[0]:
            best = (float(vals[i, j]), float(nus[i]), float(mus[j]))
        half = 0.5 * 10.0 ** -(rnd + 1)
        _, bn, bm = best
        lo_n, hi_n = max(0.0, bn - half), min(1.0, bn + half)
        lo_m, hi_m = max(0.0, bm - half), min(1.0, bm + half)
    return best


def maximize_surface(terms: TTerms, grid: int = 101, refine_rounds: int = 3,
                     tol: float = CORNER_TOL) -> MaxRecord:
    """Maximize ``F`` over the unit square for one ``c``.

    Takes the better of a refined grid search and the analytic candidates.  Ties
    within ``tol`` of ``F(1, 1)`` resolve to the corner ``(1, 1)``.
    """
    corner = surface_F(terms, 1.0, 1.0)
    best_val, best_nu, best_mu = _grid_max(terms, grid, refine_rounds)
    for nu, mu in _analytic_candidates(terms):
        v = surface_F(terms, nu, mu)
        if v > best_val:
            best_val, best_nu, best_mu = v, nu, mu
    if best_val - corner <= 0.0:
        best_val, best_nu, best_mu = corner, 1.0, 1.0
    t34 = terms.t3 + terms.t4
    t324 = terms.t3 + 2 * terms.t4
    return MaxRecord(
        c=terms.c, argmax=[best_nu, best_mu], max=best_val, corner=corner,
        t3_plus_t4=t34, t3_plus_2t4=t324, discriminant=4 * terms.t3 * t324,
        flagged=bool(best_val - corner > tol),
    )


def verify_max_structure(params: ClassParams, phi: PhiSpec, c_steps: int = 51, grid: int = 101,
                         refine_rounds: int = 3, tol: float = CORNER_TOL) -> MaxReport:
    """Grid-maximize ``F`` for each ``c`` on a uniform grid and compare with ``F(1, 1)``.

    Records where the maximum beats the corner by more than ``tol`` are
    flagged; nothing is dropped.
    """
    if c_steps < 2:
        raise ValidationError("c_steps must be >= 2")
    if grid < 11:
        raise ValidationError("grid must be >= 11")
    records = [maximize_surface(t_terms(params, phi, float(c)), grid, refine_rounds, tol)
               for c in np.linspace(0.0, 1.0, c_steps)]
    return MaxReport(records, tol)


# -- special cases ---------------------------------------------------------

COROLLARY_PARAMS = {
    1: ("lam", "phi"),
    2: ("alpha", "lam"),
    3: ("alpha", "beta"),
    4: ("alpha",),
    5: ("alpha", "lam", "delta"),
    6: ("alpha", "delta"),
    7: ("alpha",),
}


def _check_range(name, value, lo, hi, lo_open=False, hi_open=False):
    ok_lo = value > lo if lo_open else value >= lo
    ok_hi = value < hi if hi_open else value <= hi
    if not (ok_lo and ok_hi):
        raise ValidationError(f"{name}={value} out of range")


def _validate_corollary(cid: int, kw: dict) -> dict:
    if cid not in COROLLARY_PARAMS:
        raise ValidationError(f"unknown corollary id {cid}; expected 1..7")
    names = COROLLARY_PARAMS[cid]
    missing = [n for n in names if n not in kw]
    extra = [n for n in kw if n not in names]
    if missing or extra:
        raise ValidationError(f"corollary {cid} takes {names}; missing {missing}, unexpected {extra}")
    out = dict(kw)
    for n in names:
        if n != "phi":
            out[n] = float(kw[n])
    if "lam" in out and not out["lam"] >= 1:
        raise ValidationError(f"lam={out['lam']} out of range")
    if "delta" in out:
        _check_range("delta", out["delta"], 0, 1)
    if "beta" in out:
        _check_range("beta", out["beta"], 0, 1)
    if "alpha" in out:
        if cid in (2, 3, 4):
            _check_range("alpha", out["alpha"], 0, 1, lo_open=True)
        else:
            _check_range("alpha", out["alpha"], 0, 1, hi_open=True)
    return out


def corollary_specialization(cid: int, **kw) -> tuple[ClassParams, PhiSpec]:
    """The ``(params, phi)`` instance of the general bound that a corollary describes."""
    kw = _validate_corollary(cid, kw)
    car = resolve_phi("caratheodory")
    if cid == 1:
        return ClassParams(1.0, kw["lam"], 0.0), kw["phi"]
    if cid == 2:
        return ClassParams(1.0, kw["lam"], 0.0), resolve_phi("power_alpha", kw["alpha"])
    if cid == 3:
        return ClassParams(1.0, 1.0, kw["beta"]), resolve_phi("power_alpha", kw["alpha"])
    if cid == 4:
        return ClassParams(1.0, 1.0, 0.0), resolve_phi("power_alpha", kw["alpha"])
    if cid == 5:
        return ClassParams(1 - kw["alpha"], kw["lam"], kw["delta"]), car
    if cid == 6:
        return ClassParams(1 - kw["alpha"], 1.0, kw["delta"]), car
    return ClassParams(1 - kw["alpha"], 1.0, 0.0), car


def corollary_bound(cid: int, printed: bool = False, **kw) -> float:
    """Closed-form bound of corollary ``cid``.

    Corollaries 3 and 6 as typeset carry one wrong exponent each (a factor
    ``1/4`` for ``1/2`` in 3, ``(1+delta)^2`` for ``(1+delta)^4`` in 6).  The
    default evaluates the forms that agree with the general bound;
    ``printed=True`` reproduces the typeset ones.
    """
    kw = _validate_corollary(cid, kw)
    if cid == 1:
        lam, phi = kw["lam"], kw["phi"]
        B1, B2, B3 = phi.coefficients
        return B1 * (abs(B3 / ((1 + lam) * (1 + 3 * lam)) - B1**3 / (1 + lam) ** 4)
                     + 4 * B1 / (1 + 2 * lam) ** 2
                     + B1**2 / ((1 + lam) ** 2 * (1 + 2 * lam))
                     + (2 * B1 + 4 * abs(B2)) / ((1 + lam) * (1 + 3 * lam)))
    if cid == 2:
        a, lam = kw["alpha"], kw["lam"]
        return 2 * a * (abs((4 * a**3 + 2 * a) / (3 * (1 + lam) * (1 + 3 * lam)) - 8 * a**3 / (1 + lam) ** 4)
                        + 8 * a / (1 + 2 * lam) ** 2
                        + 4 * a**2 / ((1 + lam) ** 2 * (1 + 2 * lam))
                        + (4 * a + 8 * a**2) / ((1 + lam) * (1 + 3 * lam)))
    if cid == 3:
        a, b = kw["alpha"], kw["beta"]
        k = 4 if printed else 2
        return 2 * a * (abs((2 * a**3 + a) / (12 * (1 + b) * (1 + 3 * b)) - a**3 / (k * (1 + b) ** 4))
                        + 8 * a / (9 * (1 + 2 * b) ** 2)
                        + a**2 / (3 * (1 + b) ** 2 * (1 + 2 * b))
                        + (a + 2 * a**2) / (2 * (1 + b) * (1 + 3 * b)))
    if cid == 4:
        a = kw["alpha"]
        return 2 * a * (abs((4 * a**3 - a) / 12) + 25 * a / 18 + 4 * a**2 / 3)
    if cid == 5:
        a, lam, d = kw["alpha"], kw["lam"], kw["delta"]
        d2, d3, d4 = 1 + lam + 2 * d, 1 + 2 * lam + 6 * d, 1 + 3 * lam + 12 * d
        return 2 * (1 - a) ** 2 * (8 / d3**2
                                   + abs(2 / (d2 * d4) - 8 * (1 - a) ** 2 / d2**4)
                                   + 4 * (1 - a) / (d2**2 * d3)
                                   + 12 / (d2 * d4))
    if cid == 6:
        a, d = kw["alpha"], kw["delta"]
        k = 2 if printed else 4
        return 2 * (1 - a) ** 2 * (8 / (9 * (1 + 2 * d) ** 2)
                                   + abs(1 / (4 * (1 + d) * (1 + 3 * d)) - (1 - a) ** 2 / (2 * (1 + d) ** k))
                                   + (1 - a) / (3 * (1 + d) ** 2 * (1 + 2 * d))
                                   + 3 / (2 * (1 + d) * (1 + 3 * d)))
    a = kw["alpha"]
    return 2 * (1 - a) ** 2 * (49 / 18 - a / 3 + abs(0.25 - (1 - a) ** 2 / 2))

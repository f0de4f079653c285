"""Ma-Minda type functions ``phi = 1 + B1 z + B2 z^2 + B3 z^3 + ...`` and the
class parameters ``(tau, lambda, delta)``.

Only ``B1, B2, B3`` are kept: nothing downstream reads a higher coefficient.

String syntax for ``phi`` (used by the CLI and sweep configs)::

    caratheodory
    order_beta:0.25
    janowski:0.5,-0.5        # A,B
    power:0.75               # ((1+z)/(1-z))**alpha
    custom:2.0,1.0,0.5       # B1,B2,B3
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .series import TruncatedSeries, SeriesDomainError

FAMILIES = ("caratheodory", "order_beta", "janowski", "power_alpha", "custom")

_ALIASES = {"power": "power_alpha", "beta": "order_beta", "order": "order_beta"}


class ValidationError(ValueError):
    """Parameter outside its admissible range."""


class InvalidPhiError(ValidationError):
    """The resolved ``phi`` violates ``B1 > 0`` or has non-finite coefficients."""


@dataclass(frozen=True)
class PhiSpec:
    family: str
    params: tuple[float, ...]
    B1: float
    B2: float
    B3: float

    def __post_init__(self):
        if not all(math.isfinite(b) for b in (self.B1, self.B2, self.B3)):
            raise InvalidPhiError(f"non-finite phi coefficients {self.coefficients}")
        if not self.B1 > 0:
            raise InvalidPhiError(f"B1 must be positive, got {self.B1}")

    @property
    def coefficients(self) -> tuple[float, float, float]:
        return (self.B1, self.B2, self.B3)

    def series(self, order: int = 3) -> TruncatedSeries:
        return TruncatedSeries.from_coeffs([1.0, self.B1, self.B2, self.B3], order)

    def to_string(self) -> str:
        name = "power" if self.family == "power_alpha" else self.family
        if not self.params:
            return name
        return name + ":" + ",".join(repr(float(p)) for p in self.params)

    def __str__(self):
        return self.to_string()


def resolve_phi(family: str, *params: float) -> PhiSpec:
    """Expand a named family into ``(B1, B2, B3)``."""
    family = _ALIASES.get(family, family)
    params = tuple(float(p) for p in params)

    def arity(n):
        if len(params) != n:
            raise ValidationError(f"{family} takes {n} parameter(s), got {len(params)}")

    if family == "caratheodory":
        arity(0)
        B = (2.0, 2.0, 2.0)
    elif family == "order_beta":
        arity(1)
        (beta,) = params
        if not 0.0 <= beta < 1.0:
            raise ValidationError(f"order_beta needs 0 <= beta < 1, got {beta}")
        b = 2.0 * (1.0 - beta)
        B = (b, b, b)
    elif family == "janowski":
        arity(2)
        A, Bj = params
        if not -1.0 <= Bj < A <= 1.0:
            raise ValidationError(f"janowski needs -1 <= B < A <= 1, got A={A}, B={Bj}")
        # (1 + A z) / (1 + B z) = 1 + (A - B) sum_k (-B)^(k-1) z^k
        d = A - Bj
        B = (d, -Bj * d, Bj * Bj * d)
    elif family == "power_alpha":
        arity(1)
        (alpha,) = params
        if not 0.0 < alpha <= 1.0:
            raise ValidationError(f"power_alpha needs 0 < alpha <= 1, got {alpha}")
        B = (2 * alpha, 2 * alpha**2, 2 * alpha * (2 * alpha**2 + 1) / 3)
    elif family == "custom":
        arity(3)
        B = params
    else:
        raise ValidationError(f"unknown phi family {family!r}; expected one of {FAMILIES}")
    return PhiSpec(family, params, *B)


def parse_phi(text: str) -> PhiSpec:
    """Parse the ``family[:p1,p2,...]`` syntax."""
    name, _, rest = text.strip().partition(":")
    try:
        params = [float(p) for p in rest.split(",")] if rest.strip() else []
    except ValueError as exc:
        raise ValidationError(f"bad phi parameters in {text!r}") from exc
    return resolve_phi(name.strip().lower(), *params)


@dataclass(frozen=True)
class ClassParams:
    tau: complex = 1.0
    lam: float = 1.0
    delta: float = 0.0
    # d2, d3, d4 denominators, filled in post-init
    d2: float = field(init=False, repr=False)
    d3: float = field(init=False, repr=False)
    d4: float = field(init=False, repr=False)

    def __post_init__(self):
        tau = complex(self.tau)
        lam, delta = float(self.lam), float(self.delta)
        if not (math.isfinite(tau.real) and math.isfinite(tau.imag)) or tau == 0:
            raise ValidationError(f"tau must be a finite nonzero complex number, got {tau}")
        if not lam >= 1.0 or not math.isfinite(lam):
            raise ValidationError(f"lambda must be >= 1, got {lam}")
        if not 0.0 <= delta <= 1.0:
            raise ValidationError(f"delta must lie in [0, 1], got {delta}")
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "d2", 1 + lam + 2 * delta)
        object.__setattr__(self, "d3", 1 + 2 * lam + 6 * delta)
        object.__setattr__(self, "d4", 1 + 3 * lam + 12 * delta)

    def weight(self, n: int) -> float:
        """``1 + (n-1)(lambda + n delta)``, the operator weight without the ``1/tau``."""
        return 1 + (n - 1) * (self.lam + n * self.delta)


def operator_weight(params: ClassParams, n: int) -> complex:
    if n < 2:
        raise ValidationError(f"operator weights are defined for n >= 2, got {n}")
    return params.weight(n) / params.tau


def apply_operator(params: ClassParams, f: TruncatedSeries, atol: float = 1e-12) -> TruncatedSeries:
    """``1 + ((1-lam) f/z + lam f' + delta z f'' - 1) / tau`` as a series.

    ``f`` must be normalized (``a0 = 0``, ``a1 = 1``).  The result has order
    ``f.order - 1`` since dividing by ``z`` drops one power.
    """
    c = f.coeffs
    if np.any(np.abs(c[..., 0]) > atol) or np.any(np.abs(c[..., 1] - 1) > atol):
        raise SeriesDomainError("apply_operator needs a normalized f (a0 = 0, a1 = 1)")
    out = np.zeros(c.shape[:-1] + (f.order,), dtype=complex)
    out[..., 0] = 1.0
    for n in range(2, f.order + 1):
        out[..., n - 1] = operator_weight(params, n) * c[..., n]
    return TruncatedSeries(out)

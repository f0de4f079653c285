"""Coefficient system of the subordination relations.

A function in the class produces two Schwarz functions ``u`` (for ``f``) and
``v`` (for ``g = f^{-1}``).  Their first three coefficients are parametrized by
``c1`` and the disk points ``x, xi`` (for ``u``) and ``y, eta`` (for ``v``),
with ``d1 = -c1``.  Everything here broadcasts over numpy arrays, so a
``SchwarzTuple`` may hold one tuple or a whole batch.
"""

from __future__ import annotations

from dataclasses import dataclass, astuple

import numpy as np

from .minda import ClassParams, PhiSpec, apply_operator
from .series import TruncatedSeries, compose, inverse_series

ADMISSIBILITY_TOL = 1e-12


class AdmissibilityError(ValueError):
    """A Schwarz parameter lies outside the closed unit disk."""


@dataclass(frozen=True)
class SchwarzTuple:
    c1: complex
    x: complex
    xi: complex
    y: complex
    eta: complex

    def check(self, tol: float = ADMISSIBILITY_TOL) -> "SchwarzTuple":
        for name, value in zip(("c1", "x", "xi", "y", "eta"), astuple(self)):
            if np.any(np.abs(value) > 1 + tol):
                raise AdmissibilityError(f"|{name}| > 1")
        return self

    def conjugate(self) -> "SchwarzTuple":
        return SchwarzTuple(*(np.conj(v) for v in astuple(self)))

    def take(self, i) -> "SchwarzTuple":
        """Element ``i`` of a batched tuple, as plain Python complex numbers."""
        return SchwarzTuple(*(complex(np.broadcast_to(v, np.shape(self.c1))[i]) for v in astuple(self)))

    def to_list(self) -> list[list[float]]:
        return [[float(np.real(v)), float(np.imag(v))] for v in astuple(self)]


@dataclass(frozen=True)
class CoefficientTriple:
    a2: complex
    a3: complex
    a4: complex


def schwarz_tail(c1, x, xi, tol: float = ADMISSIBILITY_TOL, check: bool = True):
    """``(c2, c3)`` of a Schwarz function from ``c1`` and the disk points ``x, xi``.

    The factor is ``1 - c1**2`` as written for the parametrization, not
    ``1 - |c1|**2``; the two agree for real ``c1``.
    """
    if check:
        for name, v in (("c1", c1), ("x", x), ("xi", xi)):
            if np.any(np.abs(v) > 1 + tol):
                raise AdmissibilityError(f"|{name}| > 1")
    k = 1 - c1 * c1
    c2 = k * x
    c3 = k * (1 - np.abs(x) ** 2) * xi - c1 * k * x * x
    return c2, c3


def schwarz_coefficients(s: SchwarzTuple, check: bool = True):
    """``(c1, c2, c3), (d1, d2, d3)`` for both Schwarz functions."""
    c2, c3 = schwarz_tail(s.c1, s.x, s.xi, check=check)
    d1 = -np.asarray(s.c1)
    d2, d3 = schwarz_tail(d1, s.y, s.eta, check=check)
    return (s.c1, c2, c3), (d1, d2, d3)


def coefficients_from_schwarz(params: ClassParams, phi: PhiSpec, s: SchwarzTuple,
                              check: bool = True) -> CoefficientTriple:
    if check:
        s.check()
    (c1, c2, c3), (_, d2, d3) = schwarz_coefficients(s, check=False)
    B1, B2, B3 = phi.coefficients
    tau, d2w, d3w, d4w = params.tau, params.d2, params.d3, params.d4

    a2 = B1 * c1 * tau / d2w
    a3 = B1**2 * c1**2 * tau**2 / d2w**2 + B1 * tau * (c2 - d2) / (2 * d3w)
    a4 = (5 * B1**2 * c1 * tau**2 * (c2 - d2) / (4 * d2w * d3w)
          + B1 * tau * (c3 - d3) / (2 * d4w)
          + B3 * c1**3 * tau / d4w
          + B2 * c1 * tau * (c2 + d2) / d4w)
    return CoefficientTriple(a2, a3, a4)


def second_hankel(t: CoefficientTriple):
    """``|a2 a4 - a3**2|``."""
    return np.abs(t.a2 * t.a4 - t.a3**2)


def pipeline_residuals(params: ClassParams, phi: PhiSpec, s: SchwarzTuple,
                       t: CoefficientTriple, printed_inverse_weight: bool = False) -> np.ndarray:
    """Left minus right side of the six coefficient equations.

    The left sides come from applying the class operator to ``f`` and to the
    reversed series ``g``; the right sides from composing ``phi`` with ``u`` and
    ``v``.  Returned array has a trailing axis of length 6, ordered::

        [z^1 of f, w^1 of g, z^2 of f, w^2 of g, z^3 of f, w^3 of g]

    By default the ``w^3`` equation for ``g`` carries the ``n = 4`` operator
    weight ``(1 + 3 lam + 12 delta) / tau``.  With ``printed_inverse_weight``
    it uses ``(1 + lam + 2 delta) / tau`` instead, the form in which the
    closed-form ``a4`` does *not* solve the system.
    """
    (c1, c2, c3), (d1, d2, d3) = schwarz_coefficients(s, check=False)
    shape = np.broadcast_shapes(*(np.shape(v) for v in (c1, c2, c3, d1, d2, d3, t.a2, t.a3, t.a4)))

    def stack(*cols):
        return np.stack([np.broadcast_to(np.asarray(c, dtype=complex), shape) for c in cols], axis=-1)

    zero, one = np.zeros(shape), np.ones(shape)
    phi_s = phi.series(3)
    rhs_f = compose(phi_s, TruncatedSeries(stack(zero, c1, c2, c3)))
    rhs_g = compose(phi_s, TruncatedSeries(stack(zero, d1, d2, d3)))

    f = TruncatedSeries(stack(zero, one, t.a2, t.a3, t.a4))
    lhs_f = apply_operator(params, f)
    g = inverse_series(f)
    lhs_g = np.array(apply_operator(params, g).coeffs)
    if printed_inverse_weight:
        lhs_g[..., 3] = params.d2 / params.tau * g[4]

    res = np.empty(shape + (6,), dtype=complex)
    res[..., 0::2] = lhs_f.coeffs[..., 1:] - rhs_f.coeffs[..., 1:]
    res[..., 1::2] = lhs_g[..., 1:] - rhs_g.coeffs[..., 1:]
    return res


def solvable_residuals(res: np.ndarray) -> np.ndarray:
    """The four combinations the closed forms are built to satisfy.

    ``[first f eq, first g eq, difference of the z^2/w^2 pair,
    difference of the z^3/w^3 pair]``.
    """
    return np.stack([res[..., 0], res[..., 1], res[..., 2] - res[..., 3], res[..., 4] - res[..., 5]], axis=-1)


def constrained_completion(params: ClassParams, phi: PhiSpec, c1, x, xi, tol: float = ADMISSIBILITY_TOL):
    """Choose ``y`` and ``eta`` so that all six equations hold, not just the
    four combinations.

    ``y`` comes from the sum of the two ``z^2``/``w^2`` equations and ``eta``
    from the ``z^3`` equation of ``f`` taken on its own.  Returns
    ``(y, eta, ok)``; ``ok`` is False where the solution leaves the closed
    unit disk or where ``1 - c1**2`` (or ``1 - |y|**2``) vanishes.
    """
    B1, B2, B3 = phi.coefficients
    tau, d2w, d3w, d4w = params.tau, params.d2, params.d3, params.d4
    c1 = np.asarray(c1, dtype=complex)
    x = np.asarray(x, dtype=complex)
    xi = np.asarray(xi, dtype=complex)
    k = 1 - c1 * c1
    c2, c3 = schwarz_tail(c1, x, xi, check=False)

    with np.errstate(divide="ignore", invalid="ignore"):
        # 2 a2^2 d3 / tau = B1 (1 - c1^2)(x + y) + 2 B2 c1^2
        y = (2 * d3w * B1**2 * c1**2 * tau / d2w**2 - 2 * B2 * c1**2) / (B1 * k) - x
        d2 = k * y
        rest = (5 * B1**2 * c1 * tau**2 * (c2 - d2) / (4 * d2w * d3w)
                + B3 * c1**3 * tau / d4w
                + B2 * c1 * tau * (c2 + d2) / d4w)
        # d4 a4 / tau = B1 c3 + 2 B2 c1 c2 + B3 c1^3 with a4 = rest + B1 tau (c3 - d3) / (2 d4)
        d3 = 2 / B1 * (d4w * rest / tau - 2 * B2 * c1 * c2 - B3 * c1**3) - c3
        eta = (d3 - c1 * k * y * y) / (k * (1 - np.abs(y) ** 2))

    ok = (np.abs(k) > tol) & np.isfinite(y) & (np.abs(y) <= 1 + tol)
    ok &= (1 - np.abs(y) ** 2 > tol) & np.isfinite(eta) & (np.abs(eta) <= 1 + tol)
    return y, eta, ok

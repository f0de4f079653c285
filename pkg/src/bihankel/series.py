"""Truncated complex power series.

A :class:`TruncatedSeries` stores the coefficients of ``z**0 .. z**N``.  The
last array axis is the power index; any leading axes are a batch, so one
object can carry many series of the same order at once (the Monte-Carlo code
relies on this).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

DEFAULT_ORDER = 4


class SeriesError(ValueError):
    """Raised for malformed series arguments (order mismatch, bad shapes)."""


class SeriesDomainError(SeriesError):
    """Raised when an operation's analytic precondition fails."""


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex)
        if c.ndim == 0 or c.shape[-1] < 1:
            raise SeriesError("a series needs at least the constant coefficient")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[complex], order: int | None = None) -> "TruncatedSeries":
        """Build a series from leading coefficients, zero-padding up to ``order``."""
        c = np.asarray(coeffs, dtype=complex)
        if order is None:
            order = c.shape[-1] - 1
        if c.shape[-1] > order + 1:
            c = c[..., : order + 1]
        pad = order + 1 - c.shape[-1]
        if pad:
            c = np.concatenate([c, np.zeros(c.shape[:-1] + (pad,), dtype=complex)], axis=-1)
        return cls(c)

    @classmethod
    def identity(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls.from_coeffs([0, 1], order)

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls.from_coeffs([1], order)

    @property
    def order(self) -> int:
        return self.coeffs.shape[-1] - 1

    def __getitem__(self, k):
        return self.coeffs[..., k]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _check_orders(self, other)
        return TruncatedSeries(self.coeffs + other.coeffs)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _check_orders(self, other)
        return TruncatedSeries(self.coeffs - other.coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return multiply(self, other)
        return TruncatedSeries(self.coeffs * other)

    __rmul__ = __mul__

    def allclose(self, other: "TruncatedSeries", atol: float = 1e-12) -> bool:
        _check_orders(self, other)
        return bool(np.allclose(self.coeffs, other.coeffs, rtol=0.0, atol=atol))


def _check_orders(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.order != b.order:
        raise SeriesError(f"order mismatch: {a.order} vs {b.order}")


def multiply(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated at the common order."""
    _check_orders(a, b)
    n = a.order
    x, y = np.broadcast_arrays(a.coeffs, b.coeffs)
    out = np.zeros(x.shape, dtype=complex)
    for k in range(n + 1):
        # out[k] = sum_i x[i] * y[k - i]
        out[..., k] = np.sum(x[..., : k + 1] * y[..., k::-1], axis=-1)
    return TruncatedSeries(out)


def compose(outer: TruncatedSeries, inner: TruncatedSeries, atol: float = 0.0) -> TruncatedSeries:
    """Coefficients of ``outer(inner(z))`` up to the common order.

    ``inner`` must vanish at the origin, otherwise the truncation is not exact.
    Evaluated by Horner's scheme in the series ring.
    """
    _check_orders(outer, inner)
    if np.any(np.abs(inner.coeffs[..., 0]) > atol):
        raise SeriesDomainError("inner series must have zero constant term")
    n = outer.order
    shape = np.broadcast_shapes(outer.coeffs.shape, inner.coeffs.shape)
    acc = np.zeros(shape, dtype=complex)
    acc[..., 0] = outer.coeffs[..., n]
    result = TruncatedSeries(acc)
    for k in range(n - 1, -1, -1):
        result = multiply(result, inner)
        c = np.array(result.coeffs)
        c[..., 0] += outer.coeffs[..., k]
        result = TruncatedSeries(c)
    return result


def invert_coefficients(a2, a3, a4):
    """Coefficients ``(A2, A3, A4)`` of the functional inverse of ``z + a2 z^2 + a3 z^3 + a4 z^4``."""
    A2 = -a2
    A3 = 2 * a2**2 - a3
    A4 = -(5 * a2**3 - 5 * a2 * a3 + a4)
    return A2, A3, A4


def inverse_series(f: TruncatedSeries) -> TruncatedSeries:
    """Series of ``f^{-1}`` through ``w^4`` for a normalized ``f`` (``a0 = 0``, ``a1 = 1``)."""
    if f.order < 4:
        raise SeriesError("inverse_series needs order >= 4")
    A2, A3, A4 = invert_coefficients(f[2], f[3], f[4])
    c = np.zeros(f.coeffs.shape, dtype=complex)
    c[..., 1] = 1
    c[..., 2], c[..., 3], c[..., 4] = A2, A3, A4
    return TruncatedSeries(c)


def hankel(coeffs: Sequence[complex], q: int, n: int) -> complex:
    """The ``q``-th Hankel determinant ``H_q(n)`` of a coefficient list.

    ``coeffs[0]`` is ``a_1`` (normally 1); entry ``(i, j)`` of the matrix is
    ``a_{n+i+j}`` with zero-based ``i, j``.
    """
    if q < 1 or n < 1:
        raise SeriesError("q and n must be positive")
    a = np.asarray(coeffs, dtype=complex)
    need = n + 2 * q - 2
    if a.shape[-1] < need:
        raise SeriesError(f"H_{q}({n}) needs a_1..a_{need}, got {a.shape[-1]} coefficients")
    if q == 2:
        # exact closed form; avoids LU round-off for the common case
        return complex(a[n - 1] * a[n + 1] - a[n] ** 2)
    idx = np.add.outer(np.arange(q), np.arange(q)) + (n - 1)
    return complex(np.linalg.det(a[idx]))


def fekete_szego(a2, a3, fs_mu: float):
    """The generalized functional ``a3 - mu * a2**2``."""
    return a3 - fs_mu * a2**2

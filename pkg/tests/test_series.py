import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bihankel.series import (TruncatedSeries, SeriesError, SeriesDomainError, multiply, compose,
                             invert_coefficients, inverse_series, hankel, fekete_szego)
from oracles import compose_by_expansion, reversion_by_iteration

S = TruncatedSeries.from_coeffs


def test_multiply_examples():
    assert multiply(S([1, 1], 3), S([1, -1], 3)).allclose(S([1, 0, -1], 3))
    a = S([0.3, -2, 1j, 4], 3)
    assert multiply(a, TruncatedSeries.one(3)).allclose(a)
    assert multiply(S([0, 1, 1], 3), S([0, 1, 1], 3)).allclose(S([0, 0, 1, 2], 3))


def test_multiply_order_mismatch():
    with pytest.raises(SeriesError):
        multiply(S([1, 1], 3), S([1, 1], 4))


def test_compose_examples():
    outer = S([1, 2, 2, 2])
    assert compose(outer, S([0, 1], 3)).allclose(outer)
    assert compose(outer, S([0, 0, 1], 3)).allclose(S([1, 0, 2, 0]))
    got = compose(outer, S([0, 0.5, 3 / 8, 15 / 32]))
    assert got.allclose(S([1, 1, 5 / 4, 31 / 16]))
    assert np.allclose(got.coeffs, compose_by_expansion([1, 2, 2, 2], [0, 0.5, 3 / 8, 15 / 32], 3))


def test_compose_rejects_constant_inner():
    with pytest.raises(SeriesDomainError):
        compose(S([1, 2, 2, 2]), S([0.1, 1], 3))


def test_compose_matches_template():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        B1, B2, B3 = rng.normal(size=3)
        c = rng.normal(size=3) + 1j * rng.normal(size=3)
        c1, c2, c3 = c
        got = compose(S([1, B1, B2, B3]), S([0, c1, c2, c3]))
        want = [1, B1 * c1, B1 * c2 + B2 * c1**2, B1 * c3 + 2 * B2 * c1 * c2 + B3 * c1**3]
        assert np.allclose(got.coeffs, want, rtol=0, atol=1e-12)


def test_compose_batched_matches_scalar():
    rng = np.random.default_rng(3)
    inner = rng.normal(size=(5, 4)) + 1j * rng.normal(size=(5, 4))
    inner[:, 0] = 0
    outer = S([1, 0.5, -1, 2])
    batch = compose(outer, TruncatedSeries(inner))
    for i in range(5):
        assert np.allclose(batch.coeffs[i], compose(outer, TruncatedSeries(inner[i])).coeffs)


@pytest.mark.parametrize("a, want", [
    ((0, 0, 0), (0, 0, 0)),
    ((1, 1, 1), (-1, 1, -1)),                         # z/(1-z) -> w/(1+w)
    ((1 / 2, 1 / 3, 1 / 4), (-1 / 2, 1 / 6, -1 / 24)),  # -log(1-z) -> 1 - exp(-w)
])
def test_invert_coefficients(a, want):
    got = invert_coefficients(*a)
    assert np.allclose(got, want, atol=1e-15)
    assert np.allclose(reversion_by_iteration(np.array(a))[2:], want, atol=1e-12)


def test_inverse_of_atanh():
    # (1/2) log((1+z)/(1-z)) = z + z^3/3 + ...; inverse is tanh(w) = w - w^3/3 + ...
    assert np.allclose(invert_coefficients(0, 1 / 3, 0), (0, -1 / 3, 0), atol=1e-15)


coef = st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False)


@settings(max_examples=200, deadline=None)
@given(coef, coef, coef)
def test_reversion_round_trip(a2, a3, a4):
    f = S([0, 1, a2, a3, a4])
    g = inverse_series(f)
    assert compose(f, g).allclose(TruncatedSeries.identity(4), atol=1e-12 * (1 + abs(a2)) ** 4 * 10)
    assert compose(g, f).allclose(TruncatedSeries.identity(4), atol=1e-12 * (1 + abs(a2)) ** 4 * 10)


def test_reversion_round_trip_tight():
    rng = np.random.default_rng(11)
    for _ in range(500):
        a = rng.uniform(-1, 1, 3) + 1j * rng.uniform(-1, 1, 3)
        f = S([0, 1, *a])
        assert compose(f, inverse_series(f)).allclose(TruncatedSeries.identity(4), atol=1e-12)


@settings(max_examples=100, deadline=None)
@given(st.lists(coef, min_size=12, max_size=12))
def test_multiply_commutative_associative(vals):
    a, b, c = (S(vals[i:i + 4]) for i in (0, 4, 8))
    assert multiply(a, b).allclose(multiply(b, a))
    assert multiply(multiply(a, b), c).allclose(multiply(a, multiply(b, c)), atol=1e-10)


def test_hankel_examples():
    assert hankel([1, 1, 1, 1], 2, 2) == 0
    assert hankel([1, 1 / 2, 1 / 3, 1 / 4], 2, 2) == pytest.approx(1 / 72, abs=1e-15)
    assert hankel([1, 1 / 2, 1 / 3, 1 / 4], 2, 1) == pytest.approx(1 / 12, abs=1e-15)


def test_hankel_general_q_matches_numpy():
    a = [1, 0.3, -0.2, 0.7, 0.1, 0.5]
    want = np.linalg.det(np.array([[a[0], a[1], a[2]], [a[1], a[2], a[3]], [a[2], a[3], a[4]]]))
    assert hankel(a, 3, 1) == pytest.approx(want)


@settings(max_examples=100)
@given(coef, coef, coef)
def test_hankel_22_is_a2a4_minus_a3sq(a2, a3, a4):
    assert hankel([1, a2, a3, a4], 2, 2) == a2 * a4 - a3 * a3


def test_hankel_needs_enough_coefficients():
    with pytest.raises(SeriesError):
        hankel([1, 2, 3], 2, 2)


def test_fekete_szego():
    assert fekete_szego(0, 0.7 + 1j, 5.0) == 0.7 + 1j
    assert fekete_szego(1, 1, 1) == 0
    assert fekete_szego(1 / 2, 1 / 3, 2) == pytest.approx(-1 / 6)
    assert fekete_szego(0.5, 0.3, 1.0) == pytest.approx(hankel([1, 0.5, 0.3], 2, 1))

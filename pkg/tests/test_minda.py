import numpy as np
import pytest

from bihankel.minda import (ClassParams, PhiSpec, ValidationError, InvalidPhiError, resolve_phi, parse_phi,
                            operator_weight, apply_operator)
from bihankel.series import TruncatedSeries, SeriesDomainError
from oracles import power_alpha_by_exp_log


def test_families():
    assert resolve_phi("caratheodory").coefficients == (2, 2, 2)
    assert resolve_phi("power_alpha", 1).coefficients == pytest.approx((2, 2, 2))
    assert resolve_phi("order_beta", 0.25).coefficients == (1.5, 1.5, 1.5)
    A, B = 0.5, -0.5
    assert resolve_phi("janowski", A, B).coefficients == pytest.approx((1.0, 0.5, 0.25))


def test_janowski_against_geometric_expansion():
    A, B = 0.7, -0.3
    # (1 + A z) * (1 - B z + B^2 z^2 - B^3 z^3)
    want = np.convolve([1, A], [1, -B, B**2, -B**3])[1:4]
    assert resolve_phi("janowski", A, B).coefficients == pytest.approx(tuple(want))


def test_power_alpha_b3_closed_form():
    for a in (0.1, 0.5, 0.9):
        assert resolve_phi("power_alpha", a).B3 == pytest.approx((4 * a**3 + 2 * a) / 3)


def test_power_alpha_matches_exp_log_oracle():
    for a in np.linspace(0.02, 1.0, 50):
        got = resolve_phi("power_alpha", a).coefficients
        assert np.allclose(got, power_alpha_by_exp_log(a)[1:], rtol=0, atol=1e-10)


def test_order_beta_is_janowski():
    for beta in np.linspace(0, 0.99, 34):
        assert resolve_phi("order_beta", beta).coefficients == resolve_phi("janowski", 1 - 2 * beta, -1).coefficients


@pytest.mark.parametrize("family, args", [
    ("order_beta", (1.0,)), ("order_beta", (-0.1,)),
    ("janowski", (0.5, 0.5)), ("janowski", (0.5, -1.5)), ("janowski", (1.5, 0.0)),
    ("power_alpha", (0.0,)), ("power_alpha", (1.2,)),
    ("caratheodory", (1.0,)), ("nope", ()),
])
def test_family_validation(family, args):
    with pytest.raises(ValidationError):
        resolve_phi(family, *args)


def test_custom_requires_positive_b1():
    assert resolve_phi("custom", 2.0, 1.0, 0.5).coefficients == (2.0, 1.0, 0.5)
    with pytest.raises(InvalidPhiError):
        resolve_phi("custom", 0.0, 1.0, 1.0)
    with pytest.raises(InvalidPhiError):
        resolve_phi("custom", 1.0, float("nan"), 1.0)


@pytest.mark.parametrize("text, coeffs", [
    ("caratheodory", (2, 2, 2)),
    ("order_beta:0.25", (1.5, 1.5, 1.5)),
    ("janowski:0.5,-0.5", (1.0, 0.5, 0.25)),
    ("power:1", (2, 2, 2)),
    ("custom:2.0,1.0,0.5", (2.0, 1.0, 0.5)),
])
def test_parse_phi(text, coeffs):
    phi = parse_phi(text)
    assert phi.coefficients == pytest.approx(coeffs)
    assert parse_phi(phi.to_string()) == phi


def test_parse_phi_garbage():
    with pytest.raises(ValidationError):
        parse_phi("janowski:a,b")


def test_class_params_validation():
    p = ClassParams(1, 1, 0)
    assert (p.d2, p.d3, p.d4) == (2, 3, 4)
    for bad in [dict(tau=0), dict(lam=0.99), dict(delta=-0.1), dict(delta=1.1), dict(tau=float("nan"))]:
        with pytest.raises(ValidationError):
            ClassParams(**bad)


def test_denominators_at_least_two():
    for lam in (1, 1.5, 10):
        for delta in (0, 0.3, 1):
            p = ClassParams(1, lam, delta)
            assert min(p.d2, p.d3, p.d4) >= 2


def test_operator_weight():
    p = ClassParams(1, 1, 0)
    assert [operator_weight(p, n) for n in (2, 3, 4)] == [2, 3, 4]
    assert operator_weight(ClassParams(2, 1, 1), 3) == 4.5
    q = ClassParams(0.3 + 0.4j, 2.5, 0.7)
    assert [operator_weight(q, n) * q.tau for n in (2, 3, 4)] == pytest.approx([q.d2, q.d3, q.d4])
    with pytest.raises(ValidationError):
        operator_weight(p, 1)


def test_apply_operator():
    p = ClassParams(1, 1, 0)
    assert apply_operator(p, TruncatedSeries.identity(4)).allclose(TruncatedSeries.one(3))
    assert apply_operator(p, TruncatedSeries.from_coeffs([0, 1, 1], 4)).allclose(
        TruncatedSeries.from_coeffs([1, 2], 3))
    a2, a3, a4 = 0.3, -1j, 2.0
    got = apply_operator(p, TruncatedSeries.from_coeffs([0, 1, a2, a3, a4]))
    assert got.allclose(TruncatedSeries.from_coeffs([1, 2 * a2, 3 * a3, 4 * a4]))


def test_apply_operator_matches_derivatives():
    # build (1-lam) f/z + lam f' + delta z f'' directly from polynomial calculus
    from numpy.polynomial import polynomial as P
    lam, delta, tau = 2.0, 0.4, 0.5 - 0.2j
    f = np.array([0, 1, 0.2 + 0.1j, -0.3, 0.05j])
    fz = f[1:]
    fp = P.polyder(f)
    fpp = P.polyder(f, 2)
    expr = (1 - lam) * fz + lam * fp + delta * np.concatenate([[0], fpp])[: len(fp)]
    e0 = np.eye(len(expr))[0]
    want = e0 + (expr - e0) / tau
    got = apply_operator(ClassParams(tau, lam, delta), TruncatedSeries(f))
    assert np.allclose(got.coeffs, want)


def test_apply_operator_linear():
    p = ClassParams(0.7 + 0.2j, 3, 0.5)
    rng = np.random.default_rng(0)
    f = np.r_[0, 1, rng.normal(size=3)]
    g = np.r_[0, 1, rng.normal(size=3)]
    h = f + g
    h[1] = 1
    lhs = apply_operator(p, TruncatedSeries(h)).coeffs - TruncatedSeries.one(3).coeffs
    rhs = (apply_operator(p, TruncatedSeries(f)).coeffs - 1 * np.eye(4)[0]) + \
          (apply_operator(p, TruncatedSeries(g)).coeffs - 1 * np.eye(4)[0])
    assert np.allclose(lhs, rhs, atol=1e-12)


def test_apply_operator_needs_normalized():
    with pytest.raises(SeriesDomainError):
        apply_operator(ClassParams(), TruncatedSeries.from_coeffs([0, 2, 1], 4))

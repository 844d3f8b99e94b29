import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbit_wigner.asymptotics import (
    MU00_AT_ZERO,
    ON_ORBIT_CONSTANT,
    SERIES_RADIUS,
    a_of,
    a_three_halves,
    dphi,
    edge_profile,
    mu00,
    mu00_closed_form,
    mu10,
    phi_of,
    predict_limit,
    predict_pointwise,
    predict_scaling,
    projector_limit,
    saddles,
    segment_area_check,
)
from orbit_wigner.errors import DomainError
from orbit_wigner.numerics import airy_ai
from orbit_wigner.phase_space import QuantumNumbers, build_frame, scaling_point
from orbit_wigner.validation import reference_point
from orbit_wigner.wigner_exact import WignerEvaluator

U_GRID = [-0.9, -0.5, -0.1, -0.01, -2e-3, 2e-3, 0.01, 0.1, 0.5, 1.0, 2.0]


def a_reference(u):
    """Real-branch a(u) at 40 digits from the arccos / arccosh closed forms."""
    with mp.workdps(40):
        u = mp.mpf(u)
        if u > 0:
            A = 3 * (u + 1) * mp.sqrt(u * (u + 2)) - 3 * mp.acosh(1 + u)
            return float(A ** (mp.mpf(2) / 3))
        A = 3 * (u + 1) * mp.sqrt(-u * (u + 2)) - 3 * mp.acos(1 + u)
        return float(-abs(A) ** (mp.mpf(2) / 3))


@pytest.mark.parametrize("u", U_GRID)
def test_a_matches_reference(u):
    assert a_of(u) == pytest.approx(a_reference(u), rel=1e-12)


def test_a_near_zero_is_smooth_across_series_switch():
    r = SERIES_RADIUS
    for u in (r * (1 - 1e-9), r * (1 + 1e-9), -r * (1 - 1e-9), -r * (1 + 1e-9)):
        assert a_of(u) == pytest.approx(a_reference(u), rel=1e-11)
    assert a_of(0.0) == 0.0
    # slope 2^{5/3} at the orbit
    assert a_of(1e-8) / 1e-8 == pytest.approx(2 ** (5 / 3), rel=1e-7)


@given(st.floats(-0.95, 2.0))
@settings(max_examples=60, deadline=None)
def test_a_is_increasing_with_sign_of_u(u):
    a = a_of(u)
    assert (a > 0) == (u > 0) or u == 0
    if u + 1e-3 <= 2.0:
        assert a_of(u + 1e-3) > a


@pytest.mark.parametrize("u", [-0.7, -0.2, 0.3, 1.5])
def test_saddles_are_critical_points(u):
    s = saddles(u)
    for v in (s.v_plus, s.v_minus):
        assert abs(dphi(v, u)) < 1e-13
        with mp.workdps(30):
            num = mp.diff(lambda t: mp.mpc(phi_of(complex(t), u)), mp.mpc(v))
        assert abs(complex(num) - dphi(v, u)) < 1e-8


@pytest.mark.parametrize("u", [-0.7, -0.2, 0.3, 1.5])
def test_profile_from_saddle_phases(u):
    s = saddles(u)
    assert (0.75j * (s.phi_plus - s.phi_minus)) == pytest.approx(a_three_halves(u), rel=1e-12)
    assert (0.5j * (s.phi_plus + s.phi_minus)) == pytest.approx(u * (u + 2), rel=1e-12, abs=1e-14)
    assert edge_profile(u).b == pytest.approx(u * (u + 2))


def test_phi_branch_cut():
    with pytest.raises(DomainError):
        phi_of(2j * 1.0, 0.0)  # w = 1 - 1 = 0


@pytest.mark.parametrize("u", [2e-3, 0.05, 0.3, 1.0, 2.0])
def test_mu00_matches_real_closed_form(u):
    assert mu00(u) == pytest.approx(mu00_closed_form(u), rel=1e-11)


def test_mu_series_agree_with_saddle_formulas_at_switch():
    r = SERIES_RADIUS
    for f in (mu00, mu10):
        for sgn in (1, -1):
            inside, outside = f(sgn * r * (1 - 1e-12)), f(sgn * r * (1 + 1e-12))
            assert inside == pytest.approx(outside, rel=1e-10)
    assert mu00(0.0) == pytest.approx(MU00_AT_ZERO, rel=1e-15)


def test_mu_domain():
    for f in (mu00, mu10, a_of, edge_profile):
        with pytest.raises(DomainError):
            f(-0.96)
        with pytest.raises(DomainError):
            f(2.5)
    with pytest.raises(DomainError):
        mu00_closed_form(0.0)


@pytest.mark.parametrize("u", [-0.9, -0.6, -0.3, -0.05])
def test_segment_area(u):
    E = 1.7
    res = segment_area_check(u, E)
    assert res.asymptotic_area == pytest.approx(res.geometric_area, rel=1e-12)
    assert res.signed_asymptotic == pytest.approx(-res.geometric_area, rel=1e-12)
    assert res.sign_matches is False


def test_segment_area_domain():
    with pytest.raises(DomainError):
        segment_area_check(0.0, 1.0)
    with pytest.raises(DomainError):
        segment_area_check(-0.95, 1.0)


def test_on_orbit_limit_constants():
    assert ON_ORBIT_CONSTANT == pytest.approx(airy_ai(0.0) / (2 ** (1 / 3) * math.pi**2))
    assert predict_limit(0.0, [0.0, 0.0], 1.0) == pytest.approx(ON_ORBIT_CONSTANT)
    assert projector_limit(0.0, 1.0) == pytest.approx(ON_ORBIT_CONSTANT / 2)
    assert predict_pointwise("on-orbit", QuantumNumbers(10)).value == pytest.approx(ON_ORBIT_CONSTANT)


def test_scaling_prediction_tends_to_limit():
    # at u = s N^{-2/3}: a N^{2/3} -> 2^{5/3} s, mu00 -> 2^{5/3} pi, e^{-b} -> 1
    s = 0.3
    E = 1.0
    vals = []
    for N in (10**3, 10**5, 10**7):
        u = s * N ** (-2 / 3)
        pred = predict_scaling(edge_profile(u), [0.0, 0.0], QuantumNumbers(N, 2, E))
        vals.append(pred.value)
    limit = 2 ** (5 / 3) * math.pi * airy_ai(2 ** (5 / 3) * s) / (4 * math.pi**3)
    errs = [abs(v - limit) for v in vals]
    assert errs[-1] < 1e-4 * abs(limit)
    assert errs[0] > errs[1] > errs[2]


def test_corrected_prediction_improves_on_leading_term():
    qn = QuantumNumbers(200, 2, 1.0)
    frame = build_frame(reference_point(1.0), 1.0)
    ev = WignerEvaluator(qn)
    lead_err = corr_err = 0.0
    for u in np.linspace(-0.1, 0.1, 9):
        exact = 200 ** (-5 / 3) * ev(scaling_point(frame, u, [0.0, 0.0]))
        pred = predict_scaling(edge_profile(u), [0.0, 0.0], qn)
        lead_err = max(lead_err, abs(exact - pred.value))
        corr_err = max(corr_err, abs(exact - pred.corrected))
    assert corr_err < lead_err / 5


def test_pointwise_origin_matches_evaluator_in_three_dimensions():
    for N in (0, 3, 8):
        qn = QuantumNumbers(N, 3, 1.2)
        assert WignerEvaluator(qn)(np.zeros(6)) == pytest.approx(predict_pointwise("origin", qn).value, rel=1e-12)


def test_pointwise_regime_validation():
    qn = QuantumNumbers(5)
    with pytest.raises(DomainError):
        predict_pointwise("interior", qn)
    with pytest.raises(DomainError):
        predict_pointwise("nowhere", qn)
    with pytest.raises(DomainError):
        predict_scaling(edge_profile(0.1), [0.0], qn)

import json
import math

import numpy as np
import pytest
from scipy.integrate import trapezoid

from orbit_wigner.errors import DomainError
from orbit_wigner.phase_space import PhasePoint, QuantumNumbers
from orbit_wigner.validation import (
    orbit_average,
    pointwise_errors,
    pointwise_scan,
    projector_average,
    rate_fit,
    reference_point,
    rows_to_csv,
    scaling_scan,
    weak_limit_test,
)
from orbit_wigner.wigner_exact import ConstantObservable, EnergyObservable, GaussianObservable


def test_rate_fit_recovers_power_law():
    N = [10, 20, 40, 80]
    rep = rate_fit([(n, 3.0 * n**-0.75) for n in N], claim="toy", target_exponent=-0.75)
    assert rep.exponent == pytest.approx(-0.75, abs=1e-12)
    assert rep.residual < 1e-12
    assert rep.N == (10, 20, 40, 80)
    doc = json.loads(rep.to_json(passed=True))
    assert doc["pass"] is True and doc["target_exponent"] == -0.75
    assert rep.to_csv().splitlines()[0] == "N,error"


@pytest.mark.parametrize("pairs", [[(1, 1.0), (2, 0.5)], [(1, 1.0), (2, 0.0), (3, 0.1)], [(0, 1.0), (2, 0.5), (3, 0.1)]])
def test_rate_fit_rejects_bad_input(pairs):
    with pytest.raises(DomainError):
        rate_fit(pairs)


def test_reference_point_is_on_shell():
    for d in (2, 4):
        p = reference_point(2.5, d)
        assert 0.5 * float(p.as_array() @ p.as_array()) == pytest.approx(2.5)


def test_scaling_scan_rows_and_csv():
    rows = scaling_scan(QuantumNumbers(50), [-0.1, 0.0, 0.1], [0.0, 0.1])
    assert len(rows) == 6
    assert rows[1].w == (0.1, 0.0) and rows[2].u == 0.0
    text = rows_to_csv(rows)
    assert text.splitlines()[0] == "u,w,exact,predicted,error_scale,corrected"
    assert len(text.splitlines()) == 7
    assert rows_to_csv([]) == ""


def test_scaling_scan_in_three_dimensions():
    rows = scaling_scan(QuantumNumbers(40, 3, 1.0), [0.0], [np.zeros(4)])
    r = rows[0]
    assert abs(r.exact - r.predicted) < 0.35 * abs(r.predicted)


def test_pointwise_errors_and_regimes():
    errs = pointwise_errors([20, 40], "off-shell")
    assert errs[1] < errs[0] * 1e-3
    origin = pointwise_errors([3, 4], "origin", d=3)
    assert max(origin) < 1e-12
    rep = pointwise_scan([25, 50, 100, 200], "on-orbit")
    assert rep.target_exponent == pytest.approx(-2 / 3)
    assert rep.exponent < 0
    with pytest.raises(DomainError):
        pointwise_scan([1, 2, 3], "elsewhere")


def test_orbit_average():
    g = GaussianObservable(0.7, tuple(reference_point(1.0).as_array()))
    t = np.linspace(0, 2 * math.pi, 20001)
    vals = g(np.stack([np.cos(t), np.sin(t), -np.sin(t), np.cos(t)], axis=-1))
    assert orbit_average(g, 1.0) == pytest.approx(trapezoid(vals, t) / (2 * math.pi), rel=1e-8)
    assert orbit_average(ConstantObservable(2.0), 1.0) == 2.0
    assert orbit_average(EnergyObservable(), 3.0) == 3.0


def test_weak_limit_exact_for_conserved_observables():
    qn = QuantumNumbers(8, 2, 1.0)
    assert weak_limit_test(ConstantObservable(), qn).error < 1e-12
    assert weak_limit_test(EnergyObservable(), qn).error < 1e-12
    g = GaussianObservable(0.7, tuple(reference_point(1.0).as_array()))
    e8 = weak_limit_test(g, qn).error
    e16 = weak_limit_test(g, QuantumNumbers(16, 2, 1.0)).error
    assert e16 < e8
    with pytest.raises(DomainError):
        weak_limit_test(g, QuantumNumbers(21))


def test_projector_average_contract():
    est = projector_average(PhasePoint(np.zeros(2), np.zeros(2)), QuantumNumbers(6), 128)
    # every coherent state has the same origin value, so the average is exact there
    assert est.value == pytest.approx(7 * 49 / math.pi**2, rel=1e-13)
    assert est.error_estimate < 1e-12
    with pytest.raises(DomainError):
        projector_average(reference_point(1.0, 3), QuantumNumbers(6, 3), 128)
    with pytest.raises(DomainError):
        projector_average(reference_point(1.0), QuantumNumbers(6), 1)

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.stats import unitary_group

from orbit_wigner.errors import DomainError
from orbit_wigner.phase_space import (
    E0,
    PhasePoint,
    QuantumNumbers,
    UnitaryMap,
    apply_unitary,
    build_frame,
    cp1_lattice,
    from_complex,
    gamma0,
    hamiltonian,
    rotate_in_orbit_plane,
    sample_cp1,
    scaling_point,
    to_complex,
)

coord = st.floats(-5, 5, allow_nan=False)


def special_unitary(d, seed):
    U = unitary_group.rvs(d, random_state=seed)
    return U / np.linalg.det(U) ** (1.0 / d)


def test_phase_point_validation_and_freezing():
    p = PhasePoint([1.0, 2.0], [3.0, 4.0])
    assert p.d == 2
    with pytest.raises(ValueError):
        p.x[0] = 5.0
    with pytest.raises(DomainError):
        PhasePoint([1.0], [2.0])
    with pytest.raises(DomainError):
        PhasePoint([1.0, 2.0], [1.0, 2.0, 3.0])
    with pytest.raises(DomainError):
        PhasePoint([1.0, math.nan], [0.0, 0.0])


def test_phase_point_round_trip_and_hash():
    c = np.array([0.5, -1.0, 2.0, 0.25, 3.0, -4.0])
    p = PhasePoint.from_array(c)
    assert p.d == 3 and np.array_equal(p.as_array(), c)
    q = PhasePoint.from_array(c.copy())
    assert p == q and hash(p) == hash(q)
    with pytest.raises(DomainError):
        PhasePoint.from_array([1.0, 2.0, 3.0])


@pytest.mark.parametrize(
    "kwargs",
    [dict(N=-1), dict(N=1.5), dict(N=2, d=1), dict(N=2, E=0.0), dict(N=2, E=math.inf)],
)
def test_quantum_numbers_validation(kwargs):
    with pytest.raises(DomainError):
        QuantumNumbers(**kwargs)


def test_quantum_numbers_hbar():
    qn = QuantumNumbers(10, 3, 2.0)
    assert qn.hbar == pytest.approx(2.0 / 11.5)
    assert qn.energy_2d == pytest.approx(qn.hbar * 11)
    assert QuantumNumbers(7).hbar == pytest.approx(1 / 8)


def test_unitary_map_checks():
    with pytest.raises(DomainError):
        UnitaryMap(np.array([[2.0, 0.0], [0.0, 0.5]]))
    with pytest.raises(DomainError):
        UnitaryMap(np.diag([1j, 1j]))  # unitary but det = -1
    assert UnitaryMap.identity(3).d == 3


def test_chart_round_trip():
    p = PhasePoint([1.0, -2.0, 0.5], [0.3, 0.0, -1.0])
    z = to_complex(p)
    assert np.allclose(z, p.x + 1j * p.xi)
    assert from_complex(z) == p


def test_gamma0_lies_on_energy_surface():
    for t in np.linspace(0, 2 * math.pi, 13):
        assert hamiltonian(gamma0(t, 1.7)) == pytest.approx(1.7, rel=1e-15)
    # gamma0 is the orbit of e0 scaled by sqrt(2E): z = sqrt(2E) e^{it} ... up to conjugation
    z = to_complex(gamma0(0.0, 1.0))
    assert abs(np.vdot(E0, z)) == pytest.approx(math.sqrt(2.0))


@given(st.floats(-10, 10))
@settings(max_examples=40, deadline=None)
def test_rotation_moves_along_orbit(theta):
    got = rotate_in_orbit_plane(theta, gamma0(0.0, 1.0))
    assert np.allclose(got.as_array(), gamma0(theta, 1.0).as_array(), atol=1e-13)


@given(st.lists(coord, min_size=6, max_size=6), st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_unitaries_preserve_energy(coords, seed):
    p = PhasePoint.from_array(coords)
    U = UnitaryMap(special_unitary(3, seed), tol=1e-10)
    q = apply_unitary(U, p)
    assert hamiltonian(q) == pytest.approx(hamiltonian(p), rel=1e-12, abs=1e-12)
    back = apply_unitary(U, q, adjoint=True)
    assert np.allclose(back.as_array(), p.as_array(), atol=1e-12)


def test_apply_unitary_dimension_mismatch():
    with pytest.raises(DomainError):
        apply_unitary(UnitaryMap.identity(3), gamma0(0.0, 1.0))


@pytest.mark.parametrize("d", [2, 3, 5])
def test_frame_is_orthogonal(d):
    E = 1.3
    U = UnitaryMap(special_unitary(d, 7 + d), tol=1e-10)
    z0 = np.zeros(d, dtype=complex)
    z0[:2] = to_complex(gamma0(0.4, E))
    base = apply_unitary(U, from_complex(z0))
    frame = build_frame(base, E)
    assert len(frame.normals) == 2 * (d - 1)
    b = base.as_array()
    # the Hamiltonian vector field at z is -i z in the chart
    tangent = from_complex(-1j * to_complex(base)).as_array()
    V = np.array([v.as_array() for v in frame.normals])
    assert np.allclose(V @ b, 0, atol=1e-12)
    assert np.allclose(V @ tangent, 0, atol=1e-12)
    assert np.allclose(V @ V.T, 2 * E * np.eye(2 * (d - 1)), atol=1e-12)


def test_frame_rejects_off_shell_point():
    with pytest.raises(DomainError):
        build_frame(PhasePoint([1.0, 0.0], [0.0, 0.5]), 1.0)


def test_scaling_point():
    frame = build_frame(gamma0(0.0, 1.0), 1.0)
    p = scaling_point(frame, 0.2, [0.0, 0.0])
    assert np.allclose(p.as_array(), 1.2 * gamma0(0.0, 1.0).as_array())
    with pytest.raises(DomainError):
        scaling_point(frame, 0.0, [0.0])


def test_cp1_lattice_unit_vectors_and_uniform_heights():
    f = cp1_lattice(1000)
    assert f.shape == (1000, 2)
    assert np.allclose(np.linalg.norm(f, axis=1), 1.0)
    # Hopf height |f1|^2 - |f2|^2 is equally spaced in (-1, 1)
    h = np.sort(np.abs(f[:, 0]) ** 2 - np.abs(f[:, 1]) ** 2)
    assert np.allclose(np.diff(h), 2 / 1000, atol=1e-12)


def test_sample_cp1_sends_e0_to_lattice_class():
    K = 64
    f = cp1_lattice(K)
    for k in (0, 5, 63):
        U = sample_cp1(k, K)
        v = U.U @ E0
        assert abs(abs(np.vdot(f[k], v)) - 1.0) < 1e-13
    with pytest.raises(DomainError):
        sample_cp1(K, K)

import math

import numpy as np
import pytest

from aptqubit import bath_integrals as bi
from aptqubit.bloch import (
    BlochState,
    TrajectoryParams,
    angular_velocity,
    axis_distance,
    linear_velocity,
    normalized_angular_velocity,
    phase,
    spin_vector,
)
from aptqubit.dynamics import InitialState, reduced_density_matrix
from aptqubit.errors import DomainError
from aptqubit.model import QubitSpec, omega0
from aptqubit.oracle import simpson_bath_integral

from conftest import APT, CLASSES, H, PT, rel

THETA0 = 3 * math.pi / 8
TP = TrajectoryParams(THETA0)


def fd_phase(q, b, tp, t, h=1e-5):
    return (phase(q, b, tp, t + h) - phase(q, b, tp, t - h)) / (2 * h)


def test_pole_is_fixed(fig6_qubits, bath):
    for t in (0.0, 1.0, 4.0):
        s = spin_vector(fig6_qubits[APT], bath, TrajectoryParams(0.0), t)
        assert s.as_tuple() == (0.0, 0.0, 1.0)


def test_equator_start(fig6_qubits, bath):
    s = spin_vector(fig6_qubits[H], bath, TrajectoryParams(math.pi / 2), 0.0)
    assert s.as_tuple() == pytest.approx((1.0, 0.0, 0.0), abs=1e-15)


def test_antipt_spin_vector_from_oracle(fig6_qubits, bath):
    q = fig6_qubits[APT]
    w0 = omega0(q)
    d = math.exp(-w0 * w0 * 4 * simpson_bath_integral("gamma", bath, 1.0))
    o2 = 2 * q.theta * simpson_bath_integral("moment0", bath, 1.0)
    o1 = 4 * q.theta * simpson_bath_integral("omega1", bath, 1.0)
    phi = -2 * w0 + w0 * (o2 - o1)
    s = spin_vector(q, bath, TP, 1.0)
    expected = (math.sin(THETA0) * math.cos(phi) * d, math.sin(THETA0) * math.sin(phi) * d, math.cos(THETA0))
    assert s.as_tuple() == pytest.approx(expected, abs=1e-10)
    assert phase(q, bath, TP, 1.0) == pytest.approx(phi, abs=1e-10)


def test_phase_at_origin(fig6_qubits, bath):
    tp = TrajectoryParams(THETA0, 0.9)
    for q in fig6_qubits.values():
        assert phase(q, bath, tp, 0.0) == 0.9


@pytest.mark.parametrize("kind", CLASSES)
def test_pure_larmor_without_theta(kind, bath):
    q = QubitSpec(kind, 0.9, 0.38, 0.8, 0.0)
    w0 = omega0(q)
    for t in (0.5, 2.0):
        assert phase(q, bath, TP, t) == -2 * w0 * t
        assert angular_velocity(q, bath, TP, t) == -2 * w0


def test_angular_velocity_at_origin(fig6_qubits, bath):
    for q in fig6_qubits.values():
        assert angular_velocity(q, bath, TP, 0.0) == -2 * omega0(q)
        assert normalized_angular_velocity(q, bath, TP, 0.0) == 1.0


@pytest.mark.parametrize("kind", CLASSES)
def test_angular_velocity_matches_finite_difference(kind, fig6_qubits, bath):
    q = fig6_qubits[kind]
    for t in list(np.linspace(0.1, 5, 50)) + [0.5, 1.0, 2.0]:
        assert rel(angular_velocity(q, bath, TP, t), fd_phase(q, bath, TP, t)) < 1e-6


def test_axis_distance_basics(fig6_qubits, bath):
    q = fig6_qubits[PT]
    assert axis_distance(q, bath, TP, 0.0) == math.sin(THETA0)
    assert axis_distance(q, bath, TrajectoryParams(0.0), 2.0) == 0.0
    for t in (0.3, 1.5):
        s = spin_vector(q, bath, TP, t)
        assert axis_distance(q, bath, TP, t) == pytest.approx(math.hypot(s.sx, s.sy), abs=1e-14)


def test_axis_distance_ordering(fig6_qubits, bath):
    cache = bi.BathIntegralCache(bath)
    for t in np.linspace(0, 5, 201)[1:]:
        d = {k: axis_distance(q, bath, TP, t, cache=cache) for k, q in fig6_qubits.items()}
        assert d[APT] > d[PT] > d[H]


def test_linear_velocity_basics(fig6_qubits, bath):
    q = fig6_qubits[H]
    assert linear_velocity(q, bath, TrajectoryParams(0.0), 1.0) == 0.0
    assert linear_velocity(q, bath, TP, 0.0) == pytest.approx(-2 * omega0(q) * math.sin(THETA0), rel=1e-15)


def test_linear_velocity_envelope(fig6_qubits, bath):
    qa, qh = fig6_qubits[APT], fig6_qubits[H]
    va0, vh0 = abs(linear_velocity(qa, bath, TP, 0.0)), abs(linear_velocity(qh, bath, TP, 0.0))
    for t in np.linspace(1, 5, 41):
        # compare the decaying envelopes d(t) |2 omega0|, the scale of |V_L|
        env_a = axis_distance(qa, bath, TP, t) * 2 * omega0(qa) / va0
        env_h = axis_distance(qh, bath, TP, t) * 2 * omega0(qh) / vh0
        assert env_a > env_h


def test_direction_change_for_antipt(fig6_qubits, bath):
    w = [angular_velocity(fig6_qubits[APT], bath, TP, t) for t in np.linspace(0, 5, 201)]
    assert w[0] < 0 and max(w) > 0


@pytest.mark.parametrize("kind", CLASSES)
def test_consistent_with_reduced_density_matrix(kind, fig6_qubits, bath):
    q = fig6_qubits[kind]
    tp = TrajectoryParams(THETA0, 0.4)
    init = InitialState.from_bloch_angles(tp.theta0, tp.phi0)
    for t in np.linspace(0, 5, 26):
        rho = reduced_density_matrix(q, bath, init, t)
        assert spin_vector(q, bath, tp, t).as_tuple() == pytest.approx(tuple(rho.bloch_vector), abs=1e-12)


@pytest.mark.parametrize("kind", CLASSES)
def test_trajectory_spirals_in_at_fixed_height(kind, fig6_qubits, bath):
    q = fig6_qubits[kind]
    cache = bi.BathIntegralCache(bath)
    states = [spin_vector(q, bath, TP, t, cache=cache) for t in np.linspace(0, 5, 101)]
    radii = [math.hypot(s.sx, s.sy) for s in states]
    assert np.all(np.diff(radii) <= 1e-15)
    assert all(s.sz == math.cos(THETA0) for s in states)


def test_validation():
    with pytest.raises(DomainError):
        TrajectoryParams(-0.1)
    with pytest.raises(DomainError):
        TrajectoryParams(3.2)
    with pytest.raises(DomainError):
        BlochState(1.0, 0.1, 0.0, 0.0)

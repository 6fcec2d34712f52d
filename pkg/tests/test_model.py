import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aptqubit.errors import DegenerateGap, DomainError
from aptqubit.model import PARITY, BathSpec, QubitSpec, SymmetryClass, hamiltonian_matrix, omega0, spectral_info

from conftest import APT, CLASSES, H, PT, random_qubit


def test_omega0_hermitian_table_parameters():
    assert omega0(QubitSpec(H, 1, 0.5, 0.8, 0.6)) == pytest.approx(math.sqrt(1.89), abs=1e-15)
    assert omega0(QubitSpec(H, 1, 0.5, 0.8, 0.6)) == pytest.approx(1.374773, abs=1e-6)


def test_omega0_antipt_reduces_to_alpha():
    assert omega0(QubitSpec(APT, 1, 0, 0, 0.6)) == 1.0


def test_omega0_antipt_table_parameters():
    assert omega0(QubitSpec(APT, 1, 0.5, 0.8, 0.6)) == pytest.approx(0.331662, abs=1e-6)


def test_antipt_on_exceptional_point_is_degenerate():
    with pytest.raises(DegenerateGap):
        QubitSpec(APT, 1, 0.6, 0.8, 0)


def test_pt_on_exceptional_point_is_degenerate():
    with pytest.raises(DegenerateGap):
        QubitSpec(PT, 0.3, 0.6, 0.8, 1.0)


@pytest.mark.parametrize("kind, params", [(PT, (0, 0.1, 0.1, 1.0)), (APT, (0.5, 0.6, 0.8, 0))])
def test_broken_regime_rejected(kind, params):
    with pytest.raises(DomainError):
        QubitSpec(kind, *params)


def test_degenerate_gap_is_a_domain_error():
    assert issubclass(DegenerateGap, DomainError)


@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
def test_nonfinite_parameters_rejected(bad):
    with pytest.raises(DomainError):
        QubitSpec(H, bad, 0.5, 0.8, 0.6)


def test_pt_gap():
    info = spectral_info(QubitSpec(PT, 0, 0.5, 0.8, 0.6))
    assert info.gap == pytest.approx(2 * math.sqrt(0.53), abs=1e-12)
    assert info.gap == 2 * info.omega0


def test_antipt_eigenvalues():
    ev = sorted(spectral_info(QubitSpec(APT, 1, 0.5, 0.8, 0.6)).eigenvalues, key=lambda z: z.real)
    assert ev[0] == pytest.approx(-0.331662 + 0.6j, abs=1e-6)
    assert ev[1] == pytest.approx(0.331662 + 0.6j, abs=1e-6)


def test_hermitian_diagonal_case():
    q = QubitSpec(H, 1, 0, 0, 0)
    info = spectral_info(q)
    assert sorted(e.real for e in info.eigenvalues) == [-1.0, 1.0]
    T = info.transform_T
    d = T @ q.matrix() @ np.linalg.inv(T)
    assert abs(d[0, 1]) == 0 and abs(d[1, 0]) == 0


def test_hermitian_eigenvalues_shifted_by_theta():
    info = spectral_info(QubitSpec(H, 1, 0.5, 0.8, 0.6))
    assert sorted(e.real for e in info.eigenvalues) == pytest.approx([0.6 - math.sqrt(1.89), 0.6 + math.sqrt(1.89)])


@pytest.mark.parametrize("kind", CLASSES)
def test_eigenvalues_match_dense_solver(kind, rng):
    for _ in range(50):
        q = random_qubit(rng, kind)
        ours = np.array(spectral_info(q).eigenvalues)
        ref = np.linalg.eigvals(q.matrix())
        # unordered comparison
        dist = np.abs(ours[:, None] - ref[None, :])
        assert min(dist[0, 0] + dist[1, 1], dist[0, 1] + dist[1, 0]) < 1e-10


@pytest.mark.parametrize("kind", CLASSES)
def test_transform_diagonalizes(kind, rng):
    for _ in range(50):
        q = random_qubit(rng, kind)
        info = spectral_info(q)
        T = info.transform_T
        d = T @ q.matrix() @ np.linalg.inv(T)
        assert abs(d[0, 1]) < 1e-12 and abs(d[1, 0]) < 1e-12
        assert d[0, 0] == pytest.approx(info.eigenvalues[0], abs=1e-12)
        assert d[1, 1] == pytest.approx(info.eigenvalues[1], abs=1e-12)


def _pt_conjugate(h):
    """(PT) h (PT)^-1 with T complex conjugation."""
    return PARITY @ h.conj() @ PARITY


def test_antipt_anticommutes_with_pt(rng):
    for _ in range(20):
        h = random_qubit(rng, APT).matrix()
        assert np.abs(_pt_conjugate(h) + h).max() < 1e-14


def test_pt_commutes_with_pt(rng):
    for _ in range(20):
        h = random_qubit(rng, PT).matrix()
        assert np.abs(_pt_conjugate(h) - h).max() < 1e-14


def test_hermitian_matrix_is_hermitian(rng):
    h = random_qubit(rng, H).matrix()
    assert np.allclose(h, h.conj().T)


@settings(max_examples=60, deadline=None)
@given(
    kind=st.sampled_from(CLASSES),
    alpha=st.floats(-3, 3),
    delta=st.floats(-3, 3),
    xi=st.floats(-3, 3),
    theta=st.floats(-3, 3),
)
def test_omega0_symmetric_in_delta_xi(kind, alpha, delta, xi, theta):
    try:
        a = QubitSpec(kind, alpha, delta, xi, theta)
    except DomainError:
        with pytest.raises(DomainError):
            QubitSpec(kind, alpha, xi, delta, theta)
        return
    b = QubitSpec(kind, alpha, xi, delta, theta)
    assert omega0(a) == pytest.approx(omega0(b), rel=1e-14)


def test_raw_matrix_allows_degenerate_parameters():
    m = hamiltonian_matrix(APT, 0, 0, 0, 0.7)
    assert np.allclose(m, 0.7j * np.eye(2))


def test_symmetry_class_parse():
    assert SymmetryClass.parse("apt") is APT
    assert SymmetryClass.parse("HERMITIAN") is H
    assert SymmetryClass.parse(PT) is PT
    with pytest.raises(DomainError):
        SymmetryClass.parse("X")


@pytest.mark.parametrize(
    "kwargs",
    [dict(j0=0), dict(j0=-1), dict(mu=-1), dict(mu=-2), dict(wc=0), dict(beta=0), dict(beta=math.nan)],
)
def test_bath_spec_validation(kwargs):
    with pytest.raises(DomainError):
        BathSpec(**kwargs)


def test_specs_are_immutable():
    q = QubitSpec(H, 1, 0.5, 0.8, 0.6)
    with pytest.raises(Exception):
        q.alpha = 2.0

"""Reduced density matrix of a dephasing qubit in its diagonal frame.

The qubit populations are frozen; the coherence picks up the bare rotation
``exp(2i omega0 t)``, a class-dependent bath phase and the decoherence
envelope ``D(t) = exp(-omega0**2 gamma(t))``.

Conventions: ``sigma_pm = (sigma_x +- i sigma_y) / 2`` so that
``rho_12 = <sigma_->`` and ``rho_21 = <sigma_+>``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import bath_integrals as bi
from .errors import DomainError
from .model import BathSpec, QubitSpec, SymmetryClass, omega0

__all__ = [
    "DensityMatrix2",
    "InitialState",
    "DephasingFactors",
    "decoherence_function",
    "phase_function",
    "dephasing_factors",
    "reduced_density_matrix",
    "time_grid",
]

_TOL = 1e-14


@dataclass(frozen=True)
class DensityMatrix2:
    """A validated 2x2 density matrix."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        m = np.array(self.entries, dtype=complex)
        if m.shape != (2, 2):
            raise DomainError(f"expected a 2x2 matrix, got shape {m.shape}")
        if abs(m[1, 0] - m[0, 1].conjugate()) > _TOL or abs(m[0, 0].imag) > _TOL or abs(m[1, 1].imag) > _TOL:
            raise DomainError("density matrix is not Hermitian")
        if abs(m[0, 0] + m[1, 1] - 1.0) > _TOL:
            raise DomainError(f"density matrix trace is {m[0, 0] + m[1, 1]}, not 1")
        if (m[0, 0] * m[1, 1]).real - abs(m[0, 1]) ** 2 < -_TOL:
            raise DomainError("density matrix is not positive semidefinite")
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)

    @classmethod
    def from_array(cls, m, *, hermitize: bool = True) -> DensityMatrix2:
        """Build from a numerically computed matrix, removing rounding-level asymmetry."""
        m = np.asarray(m, dtype=complex)
        if hermitize:
            m = 0.5 * (m + m.conj().T)
        return cls(m)

    rho11 = property(lambda self: self.entries[0, 0].real)
    rho22 = property(lambda self: self.entries[1, 1].real)
    rho12 = property(lambda self: self.entries[0, 1])
    rho21 = property(lambda self: self.entries[1, 0])

    @property
    def bloch_vector(self) -> np.ndarray:
        """(x, y, z) with ``rho = (1 + r . sigma) / 2``."""
        return np.array([2 * self.rho12.real, -2 * self.rho12.imag, self.rho11 - self.rho22])

    def trace(self) -> float:
        return float((self.entries[0, 0] + self.entries[1, 1]).real)

    def det(self) -> float:
        return float(np.linalg.det(self.entries).real)


@dataclass(frozen=True)
class InitialState:
    """Qubit initial state from ``<sigma_z>`` and ``<sigma_+>``."""

    sz: float
    splus: complex

    def __post_init__(self) -> None:
        sz, sp = float(self.sz), complex(self.splus)
        if not -1.0 <= sz <= 1.0:
            raise DomainError(f"<sigma_z> must lie in [-1, 1], got {sz}")
        if sz * sz + 4 * abs(sp) ** 2 > 1.0 + 1e-12:
            raise DomainError("Bloch vector longer than 1")
        object.__setattr__(self, "sz", sz)
        object.__setattr__(self, "splus", sp)

    @property
    def sminus(self) -> complex:
        return self.splus.conjugate()

    @property
    def is_pure(self) -> bool:
        return abs(self.sz**2 + 4 * abs(self.splus) ** 2 - 1.0) < 1e-12

    @classmethod
    def from_bloch_angles(cls, theta0: float, phi0: float = 0.0) -> InitialState:
        """Pure state at polar angle ``theta0`` and azimuth ``phi0``."""
        return cls(math.cos(theta0), 0.5 * math.sin(theta0) * complex(math.cos(phi0), math.sin(phi0)))

    @classmethod
    def equal_superposition(cls) -> InitialState:
        """The pure state with equal populations, ``rho_11 = rho_22 = rho_12 = 1/2``."""
        return cls(0.0, 0.5)

    def matrix(self) -> DensityMatrix2:
        return DensityMatrix2(np.array([
            [0.5 * (1 + self.sz), self.sminus],
            [self.splus, 0.5 * (1 - self.sz)],
        ]))


@dataclass(frozen=True)
class DephasingFactors:
    decoherence: float
    phase: float


def decoherence_function(q: QubitSpec, b: BathSpec, t: float, config=None, *, cache=None) -> float:
    """``D(t) = exp(-omega0**2 * gamma(t))``, the same law for every class."""
    return math.exp(-omega0(q) ** 2 * bi.gamma(b, t, config, cache=cache))


def bath_phase(q: QubitSpec, b: BathSpec, t: float, config=None, *, cache=None) -> float:
    """The class-dependent phase function ``Omega~(t)`` (without the omega0 factor)."""
    if q.kind is SymmetryClass.HERMITIAN:
        return bi.omega_phase_hermitian(b, q.theta, t, config, cache=cache)
    if q.kind is SymmetryClass.PT_SYMMETRIC:
        return -bi.omega_phase_hermitian(b, q.theta, t, config, cache=cache)
    return bi.omega2(b, q.theta, t) - bi.omega1(b, q.theta, t, config, cache=cache)


def bath_phase_rate(q: QubitSpec, b: BathSpec, t: float, config=None, *, cache=None) -> float:
    """Analytic time derivative of :func:`bath_phase`."""
    if q.kind is SymmetryClass.HERMITIAN:
        return bi.omega_phase_hermitian_rate(b, q.theta, t, config, cache=cache)
    if q.kind is SymmetryClass.PT_SYMMETRIC:
        return -bi.omega_phase_hermitian_rate(b, q.theta, t, config, cache=cache)
    return bi.omega2_rate(b, q.theta, t) - bi.omega1_rate(b, q.theta, t, config, cache=cache)


def phase_function(q: QubitSpec, b: BathSpec, t: float, config=None, *, cache=None) -> float:
    """``omega0 * Omega~(t)``: Omega for H, -Omega for PT, Omega2 - Omega1 for APT."""
    return omega0(q) * bath_phase(q, b, t, config, cache=cache)


def dephasing_factors(q: QubitSpec, b: BathSpec, t: float, config=None, *, cache=None) -> DephasingFactors:
    return DephasingFactors(
        decoherence=decoherence_function(q, b, t, config, cache=cache),
        phase=phase_function(q, b, t, config, cache=cache),
    )


def coherence_factor(q: QubitSpec, b: BathSpec, t: float, config=None, *, cache=None) -> complex:
    """``rho_12(t) / rho_12(0) = exp(2i omega0 t) exp(-i phase) D(t)``."""
    f = dephasing_factors(q, b, t, config, cache=cache)
    w0 = omega0(q)
    return complex(np.exp(1j * (2.0 * w0 * t - f.phase))) * f.decoherence


def reduced_density_matrix(
    q: QubitSpec, b: BathSpec, init: InitialState, t: float, config=None, *, cache=None
) -> DensityMatrix2:
    """Evolved reduced density matrix of the qubit in its diagonal frame."""
    if t < 0:
        raise DomainError(f"t must be >= 0, got {t}")
    rho12 = init.sminus
    if t > 0 and rho12 != 0:
        rho12 = rho12 * coherence_factor(q, b, t, config, cache=cache)
    return DensityMatrix2(np.array([
        [0.5 * (1 + init.sz), rho12],
        [rho12.conjugate(), 0.5 * (1 - init.sz)],
    ]))


def time_grid(t_max: float, steps: int = 400, t_min: float = 0.0) -> np.ndarray:
    """Uniform grid of ``steps`` points on ``[t_min, t_max]``."""
    if not t_max > t_min:
        raise DomainError("t_max must exceed t_min")
    if steps < 2:
        raise DomainError("need at least two grid points")
    return np.linspace(t_min, t_max, steps)

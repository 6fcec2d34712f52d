"""Spin-vector trajectory of a dephasing qubit on the Bloch sphere.

Direction convention: viewed from +z, a decreasing azimuth ``phi`` is a
clockwise rotation.  :func:`angular_velocity` returns the raw ``dphi/dt``;
:func:`normalized_angular_velocity` flips the sign so that clockwise motion is
positive and divides by the bare Larmor rate ``2 omega0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .dynamics import bath_phase, bath_phase_rate, decoherence_function
from .errors import DomainError
from .model import BathSpec, QubitSpec, omega0

__all__ = [
    "BlochState",
    "TrajectoryParams",
    "spin_vector",
    "phase",
    "angular_velocity",
    "normalized_angular_velocity",
    "axis_distance",
    "linear_velocity",
]


@dataclass(frozen=True)
class BlochState:
    sx: float
    sy: float
    sz: float
    t: float

    def __post_init__(self) -> None:
        if self.sx**2 + self.sy**2 + self.sz**2 > 1 + 1e-12:
            raise DomainError("spin vector longer than 1")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.sx, self.sy, self.sz)


@dataclass(frozen=True)
class TrajectoryParams:
    theta0: float
    phi0: float = 0.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.theta0 <= math.pi:
            raise DomainError(f"theta0 must lie in [0, pi], got {self.theta0}")


def phase(q: QubitSpec, b: BathSpec, tp: TrajectoryParams, t: float, config=None, *, cache=None) -> float:
    """Azimuth ``phi(t) = phi0 - 2 omega0 t + omega0 Omega~(t)``."""
    w0 = omega0(q)
    return tp.phi0 - 2.0 * w0 * t + w0 * bath_phase(q, b, t, config, cache=cache)


def spin_vector(q: QubitSpec, b: BathSpec, tp: TrajectoryParams, t: float, config=None, *, cache=None) -> BlochState:
    d = axis_distance(q, b, tp, t, config, cache=cache)
    phi = phase(q, b, tp, t, config, cache=cache)
    return BlochState(d * math.cos(phi), d * math.sin(phi), math.cos(tp.theta0), float(t))


def angular_velocity(q: QubitSpec, b: BathSpec, tp: TrajectoryParams, t: float, config=None, *, cache=None) -> float:
    """``dphi/dt = -2 omega0 + omega0 dOmega~/dt`` from the analytic rate integrals."""
    w0 = omega0(q)
    return -2.0 * w0 + w0 * bath_phase_rate(q, b, t, config, cache=cache)


def normalized_angular_velocity(q, b, tp, t, config=None, *, cache=None) -> float:
    """Angular velocity in units of the Larmor rate, clockwise positive (1 at t = 0)."""
    return -angular_velocity(q, b, tp, t, config, cache=cache) / (2.0 * omega0(q))


def axis_distance(q: QubitSpec, b: BathSpec, tp: TrajectoryParams, t: float, config=None, *, cache=None) -> float:
    """Distance from the z axis, ``sin(theta0) D(t)``."""
    s = math.sin(tp.theta0)
    if s == 0.0:
        return 0.0
    return s * decoherence_function(q, b, t, config, cache=cache)


def linear_velocity(q: QubitSpec, b: BathSpec, tp: TrajectoryParams, t: float, config=None, *, cache=None) -> float:
    return axis_distance(q, b, tp, t, config, cache=cache) * angular_velocity(q, b, tp, t, config, cache=cache)

"""Qubit and bath parameter types, and the spectral data of the three qubit classes.

Every qubit Hamiltonian handled here has the generic two-level form

    H_S = c * I + a * sigma_z + [[0, u], [l, 0]],

with eigenvalues ``c -+ omega0`` where ``omega0**2 = a**2 + u*l``.  The three
classes differ only in which of the four real parameters feed ``c``, ``a``,
``u`` and ``l``:

=========  ============  ============  ===========  ============
class      c             a             u            l
=========  ============  ============  ===========  ============
H          theta         alpha         xi + i delta  xi - i delta
PT         alpha         i theta       xi + i delta  xi - i delta
APT        i theta       alpha         xi + i delta  -xi + i delta
=========  ============  ============  ===========  ============
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateGap, DomainError

__all__ = [
    "SymmetryClass",
    "QubitSpec",
    "BathSpec",
    "SpectralInfo",
    "omega0",
    "spectral_info",
    "PARITY",
]

#: Parity operator shared by the PT and anti-PT classes.
PARITY = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)


class SymmetryClass(enum.Enum):
    HERMITIAN = "H"
    PT_SYMMETRIC = "PT"
    ANTI_PT_SYMMETRIC = "APT"

    @classmethod
    def parse(cls, label: str | SymmetryClass) -> SymmetryClass:
        """Accept an enum member, its value (``"H"``, ``"PT"``, ``"APT"``) or its name."""
        if isinstance(label, cls):
            return label
        key = str(label).strip()
        for member in cls:
            if key.upper() in (member.value, member.name):
                return member
        raise DomainError(f"unknown symmetry class {label!r}; expected one of H, PT, APT")


@dataclass(frozen=True)
class QubitSpec:
    """A qubit of a given symmetry class with real parameters alpha, delta, xi, theta.

    Construction fails with :class:`DomainError` when the parameters put the qubit
    in its broken-symmetry regime (imaginary gap) and with :class:`DegenerateGap`
    when they sit exactly on the exceptional point.
    """

    kind: SymmetryClass
    alpha: float
    delta: float
    xi: float
    theta: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", SymmetryClass.parse(self.kind))
        for name in ("alpha", "delta", "xi", "theta"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise DomainError(f"{name} must be finite, got {value}")
            object.__setattr__(self, name, value)
        r = self.radicand
        # radicands within rounding of zero are the exceptional point itself
        scale = self.alpha**2 + self.delta**2 + self.xi**2 + self.theta**2
        if abs(r) <= 8 * np.finfo(float).eps * scale:
            raise DegenerateGap(f"{self.kind.value} qubit has a degenerate gap (omega0 = 0)")
        if r < 0:
            raise DomainError(
                f"{self.kind.value} qubit outside its unbroken domain (omega0^2 = {r:.6g} < 0)"
            )

    @property
    def radicand(self) -> float:
        """omega0 squared, before any validity check."""
        a, d, x, th = self.alpha, self.delta, self.xi, self.theta
        if self.kind is SymmetryClass.HERMITIAN:
            return a * a + d * d + x * x
        if self.kind is SymmetryClass.PT_SYMMETRIC:
            return x * x + d * d - th * th
        return a * a - d * d - x * x

    def blocks(self) -> tuple[complex, complex, complex, complex]:
        """The (c, a, u, l) decomposition of the qubit Hamiltonian."""
        a, d, x, th = self.alpha, self.delta, self.xi, self.theta
        u = complex(x, d)
        if self.kind is SymmetryClass.HERMITIAN:
            return complex(th), complex(a), u, u.conjugate()
        if self.kind is SymmetryClass.PT_SYMMETRIC:
            return complex(a), complex(0.0, th), u, u.conjugate()
        return complex(0.0, th), complex(a), u, complex(-x, d)

    def matrix(self) -> np.ndarray:
        """The 2x2 qubit Hamiltonian in the computational basis."""
        return hamiltonian_matrix(self.kind, self.alpha, self.delta, self.xi, self.theta)


def hamiltonian_matrix(
    kind: SymmetryClass | str, alpha: float, delta: float, xi: float, theta: float
) -> np.ndarray:
    """Explicit 2x2 matrix of the given class, without any domain validation.

    Useful for the degenerate or broken-symmetry corners that :class:`QubitSpec`
    refuses, e.g. the bare ``i*theta*I`` anti-PT Hamiltonian.
    """
    kind = SymmetryClass.parse(kind)
    if kind is SymmetryClass.HERMITIAN:
        rows = [[alpha + theta, complex(xi, delta)], [complex(xi, -delta), -alpha + theta]]
    elif kind is SymmetryClass.PT_SYMMETRIC:
        rows = [[complex(alpha, theta), complex(xi, delta)], [complex(xi, -delta), complex(alpha, -theta)]]
    else:
        rows = [[complex(alpha, theta), complex(xi, delta)], [complex(-xi, delta), complex(-alpha, theta)]]
    return np.array(rows, dtype=complex)


@dataclass(frozen=True)
class BathSpec:
    """Bosonic bath with spectral density ``J(w) = j0 * w**(1 + mu) * exp(-w / wc)``
    at inverse temperature ``beta``."""

    j0: float = 1.0
    mu: float = -0.5
    wc: float = 1.0
    beta: float = 0.5

    def __post_init__(self) -> None:
        for name in ("j0", "mu", "wc", "beta"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise DomainError(f"{name} must be finite, got {value}")
            object.__setattr__(self, name, value)
        if self.j0 <= 0:
            raise DomainError(f"j0 must be > 0, got {self.j0}")
        if self.mu <= -1:
            raise DomainError(f"mu must be > -1 for the bath integrals to converge, got {self.mu}")
        if self.wc <= 0:
            raise DomainError(f"wc must be > 0, got {self.wc}")
        if self.beta <= 0:
            raise DomainError(f"beta must be > 0, got {self.beta}")


@dataclass(frozen=True)
class SpectralInfo:
    omega0: float
    eigenvalues: tuple[complex, complex]
    gap: float
    transform_T: np.ndarray


def omega0(q: QubitSpec) -> float:
    """Half the energy gap of the qubit.

    Raises DegenerateGap on the exceptional point; :class:`QubitSpec` already
    refuses those parameters, so this only fires for hand-built instances.
    """
    r = q.radicand
    if r <= 0:
        raise DegenerateGap(f"omega0^2 = {r} is not positive")
    return math.sqrt(r)


def spectral_info(q: QubitSpec) -> SpectralInfo:
    """Eigenvalues ``(c - omega0, c + omega0)`` and the (unnormalized) matrix T
    with ``T H T^-1 = diag(c - omega0, c + omega0) = c - omega0 * sigma_z``."""
    w0 = omega0(q)
    c, a, u, _ = q.blocks()
    if abs(u) > 1e-14 * max(1.0, abs(a)):
        T = np.array([[w0 - a, -u], [w0 + a, u]], dtype=complex)
    elif a.real > 0:
        # already diagonal with the upper level on top: swap to keep the ordering
        T = PARITY.copy()
    else:
        T = np.eye(2, dtype=complex)
    T.setflags(write=False)
    return SpectralInfo(
        omega0=w0,
        eigenvalues=(c - w0, c + w0),
        gap=2.0 * w0,
        transform_T=T,
    )

"""Brute-force cross-checks for the closed forms used elsewhere in the package.

* Bath integrals by fixed-panel Simpson and midpoint rules in a power-law
  variable ``w = u**p`` that removes the ``w -> 0`` singularity instead of
  patching it.
* The bathless non-Hermitian qubit, by RK4 on the nonlinear Liouville
  equation versus the normalized ``U rho U^+``.
* Discrete bosonic baths on truncated Fock spaces: exact dephasing sums, the
  explicit time-dependent Hamiltonian of the Dyson-mapped anti-PT qubit, and
  the density-matrix Dyson relation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.linalg import expm

from . import bath_integrals as bi
from .dynamics import DensityMatrix2
from .errors import (
    ConditioningFailure,
    DomainError,
    NormalizationCollapse,
    NumericalFailure,
    TruncationError,
)
from .model import BathSpec, QubitSpec, SymmetryClass, omega0

__all__ = [
    "simpson_bath_integral",
    "midpoint_bath_integral",
    "LiouvilleCheck",
    "nonhermitian_closed_form",
    "nonhermitian_rk4",
    "liouville_check",
    "evolve_qubit_nonhermitian",
    "DiscreteBathSpec",
    "sample_bath_modes",
    "discrete_dephasing_exact",
    "discrete_dephasing_similarity",
    "discrete_dephasing_fock",
    "discrete_dephasing_fock_series",
    "dyson_hamiltonian",
    "fock_evolution",
    "DysonMapSample",
    "dyson_map",
    "verify_dyson_density_map",
    "fisher_by_kl",
    "OracleCheck",
    "quadrature_discrepancy",
    "run_suite",
]

SIGMA_Z = np.diag([1.0, -1.0]).astype(complex)

# ---------------------------------------------------------------------------
# bath integrals by fixed-panel rules

_ORACLE_KERNELS: dict[str, Callable] = {
    "gamma": lambda w, t, beta: 2 * np.sin(w * t / 2) ** 2 / w**2 / np.tanh(beta * w / 2),
    "dgamma_dbeta": lambda w, t, beta: -np.sin(w * t / 2) ** 2 / w / np.sinh(beta * w / 2) ** 2,
    "omega": lambda w, t, beta: (w * t - np.sin(w * t)) / w**2,
    "omega1": lambda w, t, beta: 2 * np.sin(w * t / 2) ** 2 / w**2,
    "omega_rate": lambda w, t, beta: 2 * np.sin(w * t / 2) ** 2 / w,
    "omega1_rate": lambda w, t, beta: np.sin(w * t) / w,
    "moment0": lambda w, t, beta: np.ones_like(w),
}

# value of K(w) * w at w -> 0 for the kernels that blow up like 1/w
_ORACLE_LIMITS = {
    "gamma": lambda t, beta: t * t / beta,
    "dgamma_dbeta": lambda t, beta: -t * t / beta**2,
}


def _substituted_integrand(kind: str, b: BathSpec, t: float, w_max_factor: float):
    """Integrand in ``u`` with ``w = u**p`` and the upper limit in ``u``.

    ``p = k / (1 + mu)`` with ``k = ceil(1 + mu)`` turns ``w**(1+mu) dw`` into
    ``p u**(k+p-1) du``, whose leading power is a nonnegative integer.
    """
    k = math.ceil(1.0 + b.mu)
    p = k / (1.0 + b.mu)
    kernel = _ORACLE_KERNELS[kind]
    u_max = (w_max_factor * b.wc) ** (1.0 / p)

    def f(u):
        u = np.asarray(u, dtype=float)
        out = np.zeros_like(u)
        pos = u > 0
        w = u[pos] ** p
        out[pos] = b.j0 * p * u[pos] ** (k + p - 1.0) * np.exp(-w / b.wc) * kernel(w, t, b.beta)
        if kind in _ORACLE_LIMITS and k == 1:
            # K(w) ~ c / w at the origin, so the integrand tends to j0 p c
            out[~pos] = b.j0 * p * _ORACLE_LIMITS[kind](t, b.beta)
        return out

    return f, u_max


def simpson_bath_integral(kind: str, b: BathSpec, t: float, panels: int = 100_000,
                          w_max_factor: float = 80.0) -> float:
    """Composite Simpson rule for ``int J K_kind dw`` (no prefactors)."""
    if panels % 2:
        panels += 1
    f, u_max = _substituted_integrand(kind, b, t, w_max_factor)
    u = np.linspace(0.0, u_max, panels + 1)
    y = f(u)
    h = u_max / panels
    return float(h / 3.0 * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-1:2].sum()))


def midpoint_bath_integral(kind: str, b: BathSpec, t: float, panels: int = 1_000_000,
                           w_max_factor: float = 80.0) -> float:
    """Midpoint (Riemann) sum for ``int J K_kind dw``; never samples ``u = 0``."""
    f, u_max = _substituted_integrand(kind, b, t, w_max_factor)
    h = u_max / panels
    u = (np.arange(panels) + 0.5) * h
    return float(h * f(u).sum())


# ---------------------------------------------------------------------------
# bathless non-Hermitian qubit


def _as_matrix(x) -> np.ndarray:
    if isinstance(x, DensityMatrix2):
        return np.array(x.entries)
    if isinstance(x, QubitSpec):
        return x.matrix()
    return np.asarray(x, dtype=complex)


def nonhermitian_closed_form(h, rho0, t: float) -> np.ndarray:
    """``U rho0 U^+ / Tr[U rho0 U^+]`` with ``U = exp(-i h t)``."""
    h, rho0 = _as_matrix(h), _as_matrix(rho0)
    u = expm(-1j * h * t)
    m = u @ rho0 @ u.conj().T
    tr = np.trace(m).real
    if not (np.isfinite(tr) and tr >= 1e-300):
        raise NormalizationCollapse(f"Tr[U rho U^+] = {tr} at t = {t}")
    return m / tr


def nonhermitian_rk4(h, rho0, t: float, steps: int = 10_000) -> np.ndarray:
    """RK4 for ``rho' = -i[H_R, rho] + {H_I, rho} - 2 rho Tr(rho H_I)``, ``H = H_R + i H_I``."""
    h, rho = _as_matrix(h), _as_matrix(rho0).copy()
    h_r = 0.5 * (h + h.conj().T)
    h_i = (h - h.conj().T) / 2j

    def rhs(r):
        return -1j * (h_r @ r - r @ h_r) + (h_i @ r + r @ h_i) - 2.0 * r * np.trace(r @ h_i)

    dt = t / steps
    for _ in range(steps):
        k1 = rhs(rho)
        k2 = rhs(rho + 0.5 * dt * k1)
        k3 = rhs(rho + 0.5 * dt * k2)
        k4 = rhs(rho + dt * k3)
        rho = rho + dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)
    return rho


@dataclass(frozen=True)
class LiouvilleCheck:
    closed: DensityMatrix2
    rk4: np.ndarray

    @property
    def discrepancy(self) -> float:
        return float(np.abs(self.closed.entries - self.rk4).max())


def liouville_check(q, rho0, t: float, steps: int = 10_000) -> LiouvilleCheck:
    """Evolve a bathless qubit both ways; ``q`` may be a :class:`QubitSpec` or a 2x2 matrix."""
    if steps < 1:
        raise DomainError("steps must be >= 1")
    closed = nonhermitian_closed_form(q, rho0, t)
    return LiouvilleCheck(DensityMatrix2.from_array(closed), nonhermitian_rk4(q, rho0, t, steps))


def evolve_qubit_nonhermitian(q, rho0, t: float, steps: int = 10_000, *, tol: float = 1e-6) -> DensityMatrix2:
    """Normalized ``U rho0 U^+`` for a bathless qubit, cross-checked against RK4.

    Raises NumericalFailure when the two integrators disagree by more than ``tol``.
    """
    check = liouville_check(q, rho0, t, steps)
    if not check.discrepancy <= tol:
        raise NumericalFailure(f"RK4 and closed form differ by {check.discrepancy:.3g} (> {tol:g})")
    return check.closed


# ---------------------------------------------------------------------------
# discrete baths


@dataclass(frozen=True)
class DiscreteBathSpec:
    """Finite set of bath modes ``(omega_k, g_k)`` with real couplings.

    ``fock_cutoff`` is raised, if needed, until every mode's thermal weight at
    the cutoff level is below 1e-8.
    """

    modes: tuple[tuple[float, float], ...]
    fock_cutoff: int = 8
    beta: float = 0.5

    def __post_init__(self) -> None:
        modes = tuple((float(w), float(g)) for w, g in self.modes)
        if not modes:
            raise DomainError("need at least one bath mode")
        if any(not w > 0 for w, _ in modes):
            raise DomainError("mode frequencies must be positive")
        if not self.beta > 0:
            raise DomainError("beta must be positive")
        if self.fock_cutoff < 8:
            raise DomainError("fock_cutoff must be >= 8")
        w_min = min(w for w, _ in modes)
        needed = math.floor(math.log(1e8) / (self.beta * w_min)) + 1
        object.__setattr__(self, "modes", modes)
        object.__setattr__(self, "fock_cutoff", max(int(self.fock_cutoff), needed))

    @property
    def omegas(self) -> np.ndarray:
        return np.array([w for w, _ in self.modes])

    @property
    def couplings(self) -> np.ndarray:
        return np.array([g for _, g in self.modes])

    def with_cutoff(self, cutoff: int) -> DiscreteBathSpec:
        return DiscreteBathSpec(self.modes, cutoff, self.beta)


def sample_bath_modes(b: BathSpec, n_modes: int = 200, w_max: float = 20.0) -> DiscreteBathSpec:
    """Discretize ``J`` on ``[0, w_max]`` with ``g_k^2 = J(w_k) dw_k``.

    Nodes are Gauss-Legendre in ``x`` with ``w = w_max x^2``, which keeps the
    ``w -> 0`` behaviour of the continuum sums smooth in ``x``.
    """
    x, wx = np.polynomial.legendre.leggauss(n_modes)
    x, wx = 0.5 * (x + 1.0), 0.5 * wx
    w = w_max * x * x
    dw = 2.0 * w_max * x * wx
    g = np.sqrt(bi.spectral_density(b, w) * dw)
    return DiscreteBathSpec(tuple(zip(w, g)), 8, b.beta)


def _discrete_sums(db: DiscreteBathSpec, theta: float, t: float) -> dict[str, float]:
    w, g2 = db.omegas, db.couplings**2
    one_minus_cos = 2.0 * np.sin(0.5 * w * t) ** 2
    return {
        "gamma": float(np.sum(4 * g2 * one_minus_cos / w**2 / np.tanh(0.5 * db.beta * w))),
        "omega": float(4 * theta * np.sum(g2 * (w * t - np.sin(w * t)) / w**2)),
        "omega1": float(4 * theta * np.sum(g2 * one_minus_cos / w**2)),
        "omega2": float(theta * t * t * np.sum(2 * g2)),
    }


def discrete_dephasing_exact(db: DiscreteBathSpec, q: QubitSpec, t: float) -> complex:
    """``rho_12(t)/rho_12(0)`` from the closed-form dephasing law, with the
    continuum integrals replaced by mode sums."""
    w0 = omega0(q)
    s = _discrete_sums(db, q.theta, t)
    if q.kind is SymmetryClass.HERMITIAN:
        phase = s["omega"]
    elif q.kind is SymmetryClass.PT_SYMMETRIC:
        phase = -s["omega"]
    else:
        phase = s["omega2"] - s["omega1"]
    return complex(np.exp(1j * w0 * (2 * t - phase) - w0 * w0 * s["gamma"]))


def discrete_dephasing_similarity(db: DiscreteBathSpec, q: QubitSpec, t: float) -> complex:
    """Exact ``rho_12(t)/rho_12(0)`` of the similarity evolution generated by
    :func:`dyson_hamiltonian` (the Heisenberg picture ``U^-1 O U``).

    For the Hermitian class this coincides with :func:`discrete_dephasing_exact`.
    For the anti-PT class the sector couplings are ``(i theta -+ omega0) V``; the
    displaced-oscillator phase ``-i omega0 Omega`` continues to the real factor
    ``exp(+omega0 Omega)``, while the ``theta t V~`` and ``theta^2 t^2`` terms
    drop out of the coherence.
    """
    w0 = omega0(q)
    s = _discrete_sums(db, q.theta, t)
    if q.kind is SymmetryClass.HERMITIAN:
        return complex(np.exp(1j * w0 * (2 * t - s["omega"]) - w0 * w0 * s["gamma"]))
    if q.kind is SymmetryClass.ANTI_PT_SYMMETRIC:
        return complex(np.exp(2j * w0 * t + w0 * s["omega"] - w0 * w0 * s["gamma"]))
    raise DomainError("the Fock-space model covers the H and APT classes only")


@dataclass(frozen=True)
class _FockOps:
    h_b: np.ndarray
    v: np.ndarray
    v_tilde: np.ndarray
    omega_k: float
    thermal: np.ndarray
    dim: int


def _fock_ops(db: DiscreteBathSpec, cutoff: int | None = None) -> _FockOps:
    cutoff = db.fock_cutoff if cutoff is None else cutoff
    n = cutoff + 1
    n_modes = len(db.modes)
    dim = n**n_modes
    if 2 * dim > 4096:
        raise DomainError(f"Fock space of dimension {2 * dim} exceeds 4096")
    a1 = np.diag(np.sqrt(np.arange(1.0, n)), 1)
    eye1 = np.eye(n)
    h_b = np.zeros((dim, dim))
    v = np.zeros((dim, dim))
    v_tilde = np.zeros((dim, dim))
    occupation = np.zeros(dim)
    for k, (w, g) in enumerate(db.modes):
        a = np.ones((1, 1))
        num = np.zeros(1)
        for j in range(n_modes):
            a = np.kron(a, a1 if j == k else eye1)
            num = np.add.outer(num, np.arange(n) if j == k else np.zeros(n)).ravel()
        h_b += w * a.T @ a
        v += g * (a + a.T)
        v_tilde += w * g * (a.T - a)
        occupation += w * num
    weights = np.exp(-db.beta * occupation)
    thermal = np.diag(weights / weights.sum())
    omega_k = float(np.sum(db.omegas * db.couplings**2))
    return _FockOps(h_b, v, v_tilde, omega_k, thermal, dim)


def _sector_hamiltonians(db: DiscreteBathSpec, q: QubitSpec, cutoff: int | None = None):
    """Bath-space generators ``t -> h_s(t)`` for the qubit sectors ``s_z = +1, -1``.

    APT: ``-s w0 (1 + V) + H_B + theta t V~ - theta^2 t^2 Omega_k``.
    H:   ``(theta - s w0)(1 + V) + H_B`` (time independent).
    """
    if q.kind is SymmetryClass.PT_SYMMETRIC:
        raise DomainError("the Fock-space model covers the H and APT classes only")
    ops = _fock_ops(db, cutoff)
    w0 = omega0(q)
    coupling = np.eye(ops.dim) + ops.v
    if q.kind is SymmetryClass.HERMITIAN:
        up = (q.theta - w0) * coupling + ops.h_b
        down = (q.theta + w0) * coupling + ops.h_b
        return (lambda t: up), (lambda t: down), ops
    up = -w0 * coupling + ops.h_b
    down = w0 * coupling + ops.h_b
    drive = q.theta * ops.v_tilde
    shift = q.theta**2 * ops.omega_k * np.eye(ops.dim)

    def moving(h0):
        return lambda t: h0 + t * drive - t * t * shift

    return moving(up), moving(down), ops


def dyson_hamiltonian(db: DiscreteBathSpec, q: QubitSpec, cutoff: int | None = None):
    """Time-dependent generator on qubit (x) truncated Fock space, as ``t -> h(t)``.

    APT: ``-w0 sz (1 + V) + H_B + theta t V~ - theta^2 t^2 Omega_k``.
    H:   ``(theta - w0 sz)(1 + V) + H_B`` (time independent).
    Both are block diagonal in ``s_z``; see :func:`_sector_hamiltonians`.
    """
    up, down, ops = _sector_hamiltonians(db, q, cutoff)
    p_up, p_down = np.diag([1.0, 0.0]), np.diag([0.0, 1.0])
    return (lambda t: np.kron(p_up, up(t)) + np.kron(p_down, down(t))), ops


def _propagator(h_of_t, t: float, steps: int) -> np.ndarray:
    """Time-ordered product of midpoint exponentials."""
    dim = h_of_t(0.0).shape[0]
    u = np.eye(dim, dtype=complex)
    if t == 0:
        return u
    dt = t / steps
    for k in range(steps):
        u = expm(-1j * dt * h_of_t((k + 0.5) * dt)) @ u
    return u


def _reduce(rho: np.ndarray, dim_b: int) -> np.ndarray:
    """Partial trace over the bath of a (qubit (x) bath) operator."""
    return np.einsum("iaja->ij", rho.reshape(2, dim_b, 2, dim_b))


_PLUS = np.full((2, 2), 0.5, dtype=complex)


def fock_evolution(db: DiscreteBathSpec, q: QubitSpec, t: float, steps: int = 2000,
                   cutoff: int | None = None, rho_s=None, record_every: int = 0):
    """Similarity-evolve ``rho_S (x) Omega_B`` under :func:`dyson_hamiltonian`.

    Returns the final total state, or ``(final, history)`` when ``record_every > 0``.
    """
    h_of_t, ops = dyson_hamiltonian(db, q, cutoff)
    rho_s = _PLUS if rho_s is None else _as_matrix(rho_s)
    rho = np.kron(rho_s, ops.thermal).astype(complex)
    if t == 0:
        return (rho, [rho]) if record_every else rho
    dt = t / steps
    history = [rho] if record_every else None
    for k in range(steps):
        step = expm(-1j * dt * h_of_t((k + 0.5) * dt))
        rho = step @ rho @ np.linalg.inv(step)
        if record_every and (k + 1) % record_every == 0:
            history.append(rho)
    return (rho, history) if record_every else rho


def _fock_coherences(db: DiscreteBathSpec, q: QubitSpec, times, steps: int, cutoff: int) -> np.ndarray:
    """Coherence ratios at ``times`` from a single midpoint propagation.

    The generator is block diagonal in ``s_z``, so the ``(1, 2)`` block of
    ``U (rho_S (x) Omega_B) U^-1`` is ``rho_12 U_+ Omega_B U_-^-1`` and the ratio
    is ``Tr[U_+ Omega_B U_-^-1]``.  The step is ``max(times) / steps``; earlier
    checkpoints use the same step.
    """
    up, down, ops = _sector_hamiltonians(db, q, cutoff)
    static = q.kind is SymmetryClass.HERMITIAN
    times = np.asarray(times, dtype=float)
    dt = float(times.max()) / steps
    u_up = np.eye(ops.dim, dtype=complex)
    u_down = np.eye(ops.dim, dtype=complex)
    now = 0.0
    out = np.ones(times.size, dtype=complex)
    for i in np.argsort(times, kind="stable"):
        target = float(times[i])
        n = int(math.ceil((target - now) / dt - 1e-9))
        if n > 0:
            h = (target - now) / n
            if static:
                u_up = expm(-1j * (target - now) * up(0.0)) @ u_up
                u_down = expm(-1j * (target - now) * down(0.0)) @ u_down
            else:
                for k in range(n):
                    mid = now + (k + 0.5) * h
                    u_up = expm(-1j * h * up(mid)) @ u_up
                    u_down = expm(-1j * h * down(mid)) @ u_down
            now = target
        if target > 0:
            out[i] = np.trace(u_up @ ops.thermal @ np.linalg.inv(u_down))
    return out


def discrete_dephasing_fock_series(db: DiscreteBathSpec, q: QubitSpec, times, steps: int = 2000,
                                   check_truncation: bool = True) -> np.ndarray:
    """:func:`discrete_dephasing_fock` at several times from one propagation."""
    if steps < 1:
        raise DomainError("steps must be >= 1")
    times = np.atleast_1d(np.asarray(times, dtype=float))
    if np.any(times < 0):
        raise DomainError("times must be >= 0")
    if not np.any(times > 0):
        return np.ones(times.size, dtype=complex)
    values = _fock_coherences(db, q, times, steps, db.fock_cutoff)
    if check_truncation:
        finer = _fock_coherences(db, q, times, steps, db.fock_cutoff + 4)
        gap = float(np.abs(finer - values).max())
        if gap > 1e-6:
            raise TruncationError(
                f"cutoff {db.fock_cutoff} -> {db.fock_cutoff + 4} changes the coherence by {gap:.3g}"
            )
    return values


def discrete_dephasing_fock(db: DiscreteBathSpec, q: QubitSpec, t: float, steps: int = 2000,
                            check_truncation: bool = True) -> complex:
    """``rho_12(t)/rho_12(0)`` from brute-force evolution on the truncated Fock space.

    ``rho_S(0) (x) Omega_B`` with the equal-population pure ``rho_S(0)`` evolves
    as ``U rho U^-1`` (the Schroedinger-picture partner of the Heisenberg
    operators ``U^-1 O U``) with ``steps`` midpoint exponentials.  Raises
    TruncationError if four extra Fock levels move the result by more than 1e-6.
    """
    return complex(discrete_dephasing_fock_series(db, q, [t], steps, check_truncation)[0])


# ---------------------------------------------------------------------------
# Dyson map


@dataclass(frozen=True)
class DysonMapSample:
    theta: float
    t: float
    eta: np.ndarray = field(repr=False)
    condition: float


def dyson_map(db: DiscreteBathSpec, theta: float, t: float, cutoff: int | None = None) -> DysonMapSample:
    """``eta = exp(-theta t) exp(-theta t V_B)`` on qubit (x) truncated Fock space."""
    ops = _fock_ops(db, cutoff)
    eta = math.exp(-theta * t) * np.kron(np.eye(2), expm(-theta * t * ops.v))
    cond = float(np.linalg.cond(eta))
    if cond > 1e12:
        raise ConditioningFailure(f"eta condition number {cond:.3g} exceeds 1e12")
    return DysonMapSample(theta, t, eta, cond)


def verify_dyson_density_map(db: DiscreteBathSpec, q: QubitSpec, t: float, steps: int = 2000,
                             cutoff: int | None = None) -> float:
    """Max entrywise gap between ``eta rho^D eta^+`` and the direct evolution under
    the mapped Hamiltonian, both reduced to the qubit and normalized.

    ``rho^D`` evolves under the non-Hermitian diagonal Hamiltonian
    ``(-w0 sz + i theta)(1 + V) + H_B`` as ``U rho U^+ / Tr``.  ``cutoff``
    overrides the Fock truncation of ``db`` (both sides use the same space).
    """
    if q.kind is not SymmetryClass.ANTI_PT_SYMMETRIC:
        raise DomainError("the Dyson map check is defined for the APT class")
    if t == 0:
        return 0.0
    ops = _fock_ops(db, cutoff)
    w0 = omega0(q)
    eye_b = np.eye(ops.dim)
    big_h = np.kron(-w0 * SIGMA_Z + 1j * q.theta * np.eye(2), eye_b + ops.v) + np.kron(np.eye(2), ops.h_b)
    rho0 = np.kron(_PLUS, ops.thermal)

    rho_d = nonhermitian_closed_form(big_h, rho0, t)
    eta = dyson_map(db, q.theta, t, cutoff).eta
    mapped = eta @ rho_d @ eta.conj().T
    mapped /= np.trace(mapped).real

    h_of_t, _ = dyson_hamiltonian(db, q, cutoff)
    u = _propagator(h_of_t, t, steps)
    direct = u @ rho0 @ u.conj().T
    direct /= np.trace(direct).real

    return float(np.abs(_reduce(mapped, ops.dim) - _reduce(direct, ops.dim)).max())


# ---------------------------------------------------------------------------
# Fisher information from its definition


def fisher_by_kl(q: QubitSpec, b: BathSpec, t: float, param: str, step: float | None = None,
                 config=None) -> float:
    """Second central difference of ``D_KL(v(p + h), v(p))`` in ``p`` (``beta`` or ``omega0``).

    The default step is 1e-3 for ``beta`` and 1e-4 for ``omega0``.  It shrinks
    to ``1e-3 / |d ln v / dp|`` where ``v`` varies faster than that, so the
    relative truncation error stays near 1e-6 in the deep decoherence tail.
    """
    from .info_measures import kl_divergence

    w0 = omega0(q)
    if param == "beta":
        slope = w0 * w0 * abs(bi.dgamma_dbeta(b, t, config))
        h = min(1e-3, 1e-3 / slope) if step is None and slope > 0 else (step or 1e-3)

        def v(x):
            bx = BathSpec(b.j0, b.mu, b.wc, x)
            return math.exp(-w0 * w0 * bi.gamma(bx, t, config))

        centre = b.beta
    elif param == "omega0":
        g = bi.gamma(b, t, config)
        slope = 2.0 * w0 * g
        h = min(1e-4, 1e-3 / slope) if step is None and slope > 0 else (step or 1e-4)

        def v(x):
            return math.exp(-x * x * g)

        centre = w0
    else:
        raise DomainError(f"unknown Fisher parameter {param!r}")
    v0 = v(centre)
    return (kl_divergence(v(centre + h), v0) + kl_divergence(v(centre - h), v0)) / (h * h)


# ---------------------------------------------------------------------------
# verification suite


@dataclass(frozen=True)
class OracleCheck:
    name: str
    discrepancy: float
    tolerance: float
    seconds: float = 0.0
    detail: str = ""

    @property
    def passed(self) -> bool:
        return bool(self.discrepancy <= self.tolerance)


SINGLE_MODE = ((1.0, 0.3),)
FOCK_TIMES = (0.2, 0.4, 0.6, 0.8, 1.0)
QUADRATURE_TIMES = (0.1, 0.5, 1.0, 2.0, 5.0)


def _timed(name, tol, fn, detail=""):
    import time

    start = time.perf_counter()
    value = fn()
    return OracleCheck(name, float(value), tol, time.perf_counter() - start, detail)


def quadrature_discrepancy(b: BathSpec, theta: float, times=QUADRATURE_TIMES, config=None) -> float:
    """Largest relative gap between the production integrals and the Simpson oracle."""
    worst = 0.0
    for t in times:
        pairs = [
            (bi.gamma(b, t, config), 4 * simpson_bath_integral("gamma", b, t)),
            (bi.dgamma_dbeta(b, t, config), 4 * simpson_bath_integral("dgamma_dbeta", b, t)),
            (bi.omega_phase_hermitian(b, theta, t, config), 4 * theta * simpson_bath_integral("omega", b, t)),
            (bi.omega1(b, theta, t, config), 4 * theta * simpson_bath_integral("omega1", b, t)),
            (bi.omega2(b, theta, t), 2 * theta * t * t * simpson_bath_integral("moment0", b, t)),
        ]
        for ours, ref in pairs:
            worst = max(worst, abs(ours - ref) / abs(ref))
    return worst


def run_suite(b: BathSpec | None = None, q_apt: QubitSpec | None = None,
              q_h: QubitSpec | None = None) -> list[OracleCheck]:
    """Run every brute-force cross-check and return the measured discrepancies.

    Defaults: the fig1 bath and the table1 qubits
    (alpha=1, delta=0.5, xi=0.8, theta=0.6).
    """
    b = b or BathSpec()
    q_apt = q_apt or QubitSpec(SymmetryClass.ANTI_PT_SYMMETRIC, 1.0, 0.5, 0.8, 0.6)
    q_h = q_h or QubitSpec(SymmetryClass.HERMITIAN, 1.0, 0.5, 0.8, 0.6)
    single = DiscreteBathSpec(SINGLE_MODE, 24, 0.5)
    checks: list[OracleCheck] = []

    checks.append(_timed("quadrature_vs_simpson", 1e-7, lambda: quadrature_discrepancy(b, 0.86),
                         "gamma, dgamma/dbeta, Omega, Omega1, Omega2; relative"))

    rho0 = np.full((2, 2), 0.5, dtype=complex)
    checks.append(_timed("liouville_rk4_vs_closed_form", 1e-8,
                         lambda: liouville_check(q_apt, rho0, 1.0).discrepancy, "APT qubit, t=1"))

    fock: dict[str, np.ndarray] = {}

    def fock_gap(q, reference):
        key = q.kind.value
        if key not in fock:
            fock[key] = discrete_dephasing_fock_series(single, q, FOCK_TIMES)
        ref = np.array([reference(single, q, t) for t in FOCK_TIMES])
        return float(np.abs(fock[key] - ref).max())

    checks.append(_timed("fock_vs_closed_form_H", 1e-5, lambda: fock_gap(q_h, discrete_dephasing_exact),
                         "single mode, t=0.2..1"))
    checks.append(_timed("fock_vs_closed_form_APT", 1e-5, lambda: fock_gap(q_apt, discrete_dephasing_exact),
                         "single mode, t=0.2..1"))
    checks.append(_timed("fock_vs_similarity_form_APT", 1e-5,
                         lambda: fock_gap(q_apt, discrete_dephasing_similarity), "single mode, t=0.2..1"))

    def continuum_gap():
        sampled = sample_bath_modes(BathSpec(b.j0, b.mu, b.wc, b.beta))
        w0 = omega0(q_apt)
        worst = 0.0
        for t in np.linspace(0.0, 3.0, 31):
            disc = abs(discrete_dephasing_exact(sampled, q_apt, t))
            cont = math.exp(-w0 * w0 * bi.gamma(b, t))
            worst = max(worst, abs(disc - cont) / cont)
        return worst

    checks.append(_timed("sampled_bath_vs_continuum", 1e-3, continuum_gap, "200 modes, |coherence|, t in [0,3]"))

    q_dyson = QubitSpec(SymmetryClass.ANTI_PT_SYMMETRIC, q_apt.alpha, q_apt.delta, q_apt.xi, 0.3)
    checks.append(_timed("dyson_density_map", 1e-4, lambda: verify_dyson_density_map(single, q_dyson, 0.5, cutoff=24),
                         "theta=0.3, t=0.5, cutoff 24"))

    from .info_measures import fisher_beta, fisher_omega0

    def fisher_gap():
        worst = 0.0
        for kind in SymmetryClass:
            q = QubitSpec(kind, q_apt.alpha, q_apt.delta, q_apt.xi, q_apt.theta)
            for fn, param in ((fisher_beta, "beta"), (fisher_omega0, "omega0")):
                exact = fn(q, b, 0.5)
                worst = max(worst, abs(fisher_by_kl(q, b, 0.5, param) - exact) / exact)
        return worst

    checks.append(_timed("fisher_vs_kl_curvature", 1e-4, fisher_gap, "all classes, t=0.5; relative"))
    return checks

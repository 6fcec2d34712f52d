"""Continuum bath integrals for the power-law bath with exponential cutoff.

Every quantity here is an integral ``int_0^inf J(w) K(w, t) dw`` with a
kind-specific kernel ``K``.  Near ``w = 0`` the integrand behaves like
``w**(1 + mu + m)`` times an analytic function, with ``m`` the kernel's
leading power.  That piece, ``[0, w_s]``, is integrated from a four-term
Taylor expansion. The remainder ``[w_s, w_max]`` goes to adaptive
Gauss-Kronrod quadrature, pre-split at the zeros of ``cos(w t)`` for
oscillatory integrands.
"""

from __future__ import annotations

import logging
import math
import threading
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .model import BathSpec
from .quadrature import integrate

log = logging.getLogger(__name__)

__all__ = [
    "QuadratureConfig",
    "BathIntegralCache",
    "KINDS",
    "spectral_density",
    "bath_integral",
    "gamma",
    "dgamma_dbeta",
    "omega_phase_hermitian",
    "omega1",
    "omega2",
    "spectral_moment",
    "omega_phase_hermitian_rate",
    "omega1_rate",
    "omega2_rate",
]

#: Kernel kinds understood by :func:`bath_integral`.
KINDS = ("gamma", "dgamma_dbeta", "omega", "omega1", "omega_rate", "omega1_rate", "moment0")

# leading power m of each kernel at w -> 0
_LEADING_POWER = {
    "gamma": -1,
    "dgamma_dbeta": -1,
    "omega": 1,
    "omega1": 0,
    "omega_rate": 1,
    "omega1_rate": 0,
    "moment0": 0,
}

_OSCILLATION_SPLIT = 50.0


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    w_max_factor: float = 60.0
    max_subdivisions: int = 2000
    #: multiplier on the width of the series-patched interval near w = 0
    patch_scale: float = 1.0

    def __post_init__(self) -> None:
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise DomainError("rel_tol and abs_tol must be positive")
        if not self.w_max_factor >= 20:
            raise DomainError(f"w_max_factor must be >= 20, got {self.w_max_factor}")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be >= 1")
        if not self.patch_scale > 0:
            raise DomainError("patch_scale must be positive")


DEFAULT_CONFIG = QuadratureConfig()


def spectral_density(b: BathSpec, w):
    """``J(w) = j0 * w**(1 + mu) * exp(-w / wc)``; vectorized over ``w``."""
    w_arr = np.asarray(w, dtype=float)
    if np.any(w_arr < 0):
        raise DomainError("spectral density is defined for w >= 0 only")
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(w_arr > 0, b.j0 * w_arr ** (1.0 + b.mu) * np.exp(-w_arr / b.wc), 0.0)
    return float(out) if out.ndim == 0 else out


# ---------------------------------------------------------------------------
# kernels


def _one_minus_cos(x):
    return 2.0 * np.sin(0.5 * x) ** 2


def _x_minus_sin(x):
    x = np.asarray(x, dtype=float)
    small = np.abs(x) < 0.5
    xs = np.where(small, x, 0.0)
    x2 = xs * xs
    # x^3/3! - x^5/5! + ... through x^13
    series = xs * x2 / 6.0 * (1 - x2 / 20.0 * (1 - x2 / 42.0 * (1 - x2 / 72.0 * (1 - x2 / 110.0 * (1 - x2 / 156.0)))))
    return np.where(small, series, x - np.sin(x))


def _coth(x):
    # coth(x) - 1 = 2 / expm1(2x); beyond 2x = 700 the correction is below 1e-300
    return 1.0 + 2.0 / np.expm1(np.minimum(2.0 * np.asarray(x, dtype=float), 700.0))


def _csch2(x):
    x = np.asarray(x, dtype=float)
    big = x > 0.5
    with np.errstate(over="ignore"):
        e = np.exp(-2.0 * np.where(big, x, 1.0))
        direct = 1.0 / np.sinh(np.where(big, 1.0, x)) ** 2
    return np.where(big, 4.0 * e / (1.0 - e) ** 2, direct)


def _kernel(kind: str, w: np.ndarray, t: float, beta: float) -> np.ndarray:
    wt = w * t
    if kind == "gamma":
        return _one_minus_cos(wt) / (w * w) * _coth(0.5 * beta * w)
    if kind == "dgamma_dbeta":
        return _one_minus_cos(wt) / (w * w) * (-0.5 * w) * _csch2(0.5 * beta * w)
    if kind == "omega":
        return _x_minus_sin(wt) / (w * w)
    if kind == "omega1":
        return _one_minus_cos(wt) / (w * w)
    if kind == "omega_rate":
        return _one_minus_cos(wt) / w
    if kind == "omega1_rate":
        return np.sin(wt) / w
    if kind == "moment0":
        return np.ones_like(w)
    raise KeyError(kind)


def _kernel_series(kind: str, t: float, beta: float) -> np.ndarray:
    """Coefficients (orders w^0..w^3) of ``K(w) / w**m``."""
    t2 = t * t
    one_minus_cos = np.array([t2 / 2.0, 0.0, -t2 * t2 / 24.0, 0.0])
    if kind == "gamma":
        w_coth = 2.0 / beta * np.array([1.0, 0.0, beta * beta / 12.0, 0.0])
        return _poly_mul(one_minus_cos, w_coth)
    if kind == "dgamma_dbeta":
        w2_csch2 = -2.0 / (beta * beta) * np.array([1.0, 0.0, -beta * beta / 12.0, 0.0])
        return _poly_mul(one_minus_cos, w2_csch2)
    if kind == "omega":
        return np.array([t2 * t / 6.0, 0.0, -t2 * t2 * t / 120.0, 0.0])
    if kind in ("omega1", "omega_rate"):
        return one_minus_cos
    if kind == "omega1_rate":
        return np.array([t, 0.0, -t2 * t / 6.0, 0.0])
    if kind == "moment0":
        return np.array([1.0, 0.0, 0.0, 0.0])
    raise KeyError(kind)


def _poly_mul(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    return np.convolve(p, q)[: len(p)]


def _patch_width(b: BathSpec, t: float, config: QuadratureConfig) -> float:
    width = min(1e-3, 0.01 / max(t, 1.0), 0.01 / b.beta, 0.01 * b.wc)
    return width * config.patch_scale


def _series_patch(kind: str, b: BathSpec, t: float, w_s: float) -> float:
    cutoff = np.array([1.0, -1.0 / b.wc, 0.5 / b.wc**2, -1.0 / (6.0 * b.wc**3)])
    coeffs = _poly_mul(cutoff, _kernel_series(kind, t, b.beta))
    p = 1.0 + b.mu + _LEADING_POWER[kind]
    powers = p + 1.0 + np.arange(4)
    return float(b.j0 * np.sum(coeffs * w_s**powers / powers))


def _panel_edges(w_lo: float, w_hi: float, t: float) -> np.ndarray:
    if t * w_hi <= _OSCILLATION_SPLIT:
        return np.array([w_lo, w_hi])
    k_lo = math.ceil(w_lo * t / math.pi - 0.5)
    k_hi = math.floor(w_hi * t / math.pi - 0.5)
    zeros = (np.arange(k_lo, k_hi + 1) + 0.5) * math.pi / t
    zeros = zeros[(zeros > w_lo) & (zeros < w_hi)]
    return np.concatenate([[w_lo], zeros, [w_hi]])


def bath_integral(kind: str, b: BathSpec, t: float, config: QuadratureConfig | None = None) -> float:
    """``int_0^inf J(w) K_kind(w, t) dw`` (without any 4 or theta prefactor)."""
    if kind not in _LEADING_POWER:
        raise KeyError(f"unknown integral kind {kind!r}")
    config = config or DEFAULT_CONFIG
    t = float(t)
    if not (t >= 0 and math.isfinite(t)):
        raise DomainError(f"t must be finite and >= 0, got {t}")
    if t == 0 and kind != "moment0":
        return 0.0
    w_s = _patch_width(b, t, config)
    w_max = config.w_max_factor * b.wc
    head = _series_patch(kind, b, t, w_s)

    def integrand(w):
        return b.j0 * w ** (1.0 + b.mu) * np.exp(-w / b.wc) * _kernel(kind, w, t, b.beta)

    body, _ = integrate(
        integrand,
        _panel_edges(w_s, w_max, t),
        rel_tol=config.rel_tol,
        abs_tol=config.abs_tol,
        max_subdivisions=config.max_subdivisions,
    )
    total = head + body
    if log.isEnabledFor(logging.DEBUG):
        tail, _ = integrate(integrand, _panel_edges(w_max, 1.5 * w_max, t), config.rel_tol, config.abs_tol, config.max_subdivisions)
        log.debug("%s(t=%g): truncation tail beyond %g wc = %.3e (relative %.3e)",
                  kind, t, config.w_max_factor, tail, tail / total if total else 0.0)
    return total


class BathIntegralCache:
    """Thread-safe memo of bath integrals on exact time-grid nodes.

    Cached values are the very floats returned by :func:`bath_integral`, so a
    hit is bit-identical to a fresh evaluation.
    """

    def __init__(self, bath: BathSpec, config: QuadratureConfig | None = None):
        self.bath = bath
        self.config = config or DEFAULT_CONFIG
        self.memo: dict[tuple[str, float], float] = {}
        self._lock = threading.Lock()

    def get(self, kind: str, t: float) -> float:
        key = (kind, float(t))
        with self._lock:
            if key in self.memo:
                return self.memo[key]
        value = bath_integral(kind, self.bath, t, self.config)
        with self._lock:
            self.memo.setdefault(key, value)
        return value

    def __len__(self) -> int:
        return len(self.memo)


def _lookup(kind: str, b: BathSpec, t: float, config, cache: BathIntegralCache | None) -> float:
    if cache is not None:
        if cache.bath != b:
            raise DomainError("cache was built for a different bath")
        return cache.get(kind, t)
    return bath_integral(kind, b, t, config)


def gamma(b: BathSpec, t: float, config: QuadratureConfig | None = None, *, cache=None) -> float:
    """Decoherence exponent ``4 int J(w) (1 - cos wt) / w^2 coth(beta w / 2) dw``."""
    return 4.0 * _lookup("gamma", b, t, config, cache)


def dgamma_dbeta(b: BathSpec, t: float, config: QuadratureConfig | None = None, *, cache=None) -> float:
    """Analytic inverse-temperature derivative of :func:`gamma`; never positive."""
    return 4.0 * _lookup("dgamma_dbeta", b, t, config, cache)


def omega_phase_hermitian(b: BathSpec, theta: float, t: float, config: QuadratureConfig | None = None, *, cache=None) -> float:
    """Hermitian-qubit phase function ``4 theta int J(w) (wt - sin wt) / w^2 dw``."""
    if theta == 0:
        return 0.0
    return 4.0 * theta * _lookup("omega", b, t, config, cache)


def omega1(b: BathSpec, theta: float, t: float, config: QuadratureConfig | None = None, *, cache=None) -> float:
    """``4 theta int J(w) (1 - cos wt) / w^2 dw``."""
    if theta == 0:
        return 0.0
    return 4.0 * theta * _lookup("omega1", b, t, config, cache)


def spectral_moment(b: BathSpec) -> float:
    """``int_0^inf J(w) dw = j0 * Gamma(2 + mu) * wc**(2 + mu)``."""
    return b.j0 * math.gamma(2.0 + b.mu) * b.wc ** (2.0 + b.mu)


def omega2(b: BathSpec, theta: float, t: float, config: QuadratureConfig | None = None, *, cache=None) -> float:
    """``theta t^2 int (J + J~) dw`` with ``J~ = J`` (real couplings)."""
    t = float(t)
    if t < 0:
        raise DomainError(f"t must be >= 0, got {t}")
    return 2.0 * theta * t * t * spectral_moment(b)


def omega_phase_hermitian_rate(b: BathSpec, theta: float, t: float, config: QuadratureConfig | None = None, *, cache=None) -> float:
    """Time derivative of :func:`omega_phase_hermitian`: ``4 theta int J (1 - cos wt) / w dw``."""
    if theta == 0:
        return 0.0
    return 4.0 * theta * _lookup("omega_rate", b, t, config, cache)


def omega1_rate(b: BathSpec, theta: float, t: float, config: QuadratureConfig | None = None, *, cache=None) -> float:
    """Time derivative of :func:`omega1`: ``4 theta int J sin(wt) / w dw``."""
    if theta == 0:
        return 0.0
    return 4.0 * theta * _lookup("omega1_rate", b, t, config, cache)


def omega2_rate(b: BathSpec, theta: float, t: float, config: QuadratureConfig | None = None, *, cache=None) -> float:
    """Time derivative of :func:`omega2`."""
    return 4.0 * theta * float(t) * spectral_moment(b)

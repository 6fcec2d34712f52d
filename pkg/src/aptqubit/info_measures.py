"""Entropies, relative entropy and Fisher information of a dephasing qubit.

All state-level quantities depend only on the Bloch-vector length ``v``.
For the equal-population pure initial state ``v(t) = D(t)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.integrate import simpson
from scipy.optimize import minimize_scalar
from scipy.special import xlogy

from . import bath_integrals as bi
from .dynamics import decoherence_function
from .errors import DomainError, EmptyCurve
from .model import BathSpec, QubitSpec, omega0

__all__ = [
    "FisherSummary",
    "bloch_length",
    "von_neumann_entropy",
    "entropy_deficit",
    "renyi_entropy",
    "kl_divergence",
    "fisher_beta",
    "fisher_omega0",
    "fisher_summary",
    "coth_minus_one",
]

LN2 = math.log(2.0)
_DEFICIT_TERMS = 10  # v < 0.1: the truncated tail is below 1e-20 relative
_KL_TERMS = 60  # |z| <= 1/2: the truncated tail is below 1e-18 relative


def _check_length(v, name: str = "v", *, open_top: bool = False) -> np.ndarray:
    arr = np.asarray(v, dtype=float)
    top_ok = arr < 1.0 if open_top else arr <= 1.0
    if np.any(~((arr >= 0.0) & top_ok)):
        bound = "[0, 1)" if open_top else "[0, 1]"
        raise DomainError(f"{name} must lie in {bound}, got {v}")
    return arr


def _scalar(x):
    return float(x) if np.ndim(x) == 0 else x


def bloch_length(q: QubitSpec, b: BathSpec, t: float, config=None, *, cache=None) -> float:
    """Bloch-vector length for the equal-population pure initial state."""
    return decoherence_function(q, b, t, config, cache=cache)


def von_neumann_entropy(v):
    """``ln 2 - (1+v)/2 ln(1+v) - (1-v)/2 ln(1-v)``."""
    v = _check_length(v)
    return _scalar(LN2 - 0.5 * xlogy(1 + v, 1 + v) - 0.5 * xlogy(1 - v, 1 - v))


def entropy_deficit(v):
    """``ln 2 - S(v)`` without cancellation, ``sum_k v^(2k) / (2k (2k - 1))``.

    Near the maximally mixed state ``S`` rounds to ``ln 2`` in double precision
    once ``v < 1e-8``; the deficit keeps entropies of nearly mixed states
    comparable.
    """
    v = _check_length(v)
    small = v < 0.1
    vs = np.where(small, v, 0.0)
    v2 = vs * vs
    series = np.zeros_like(v2)
    for k in range(_DEFICIT_TERMS, 0, -1):
        series = v2 * (1.0 / (2 * k * (2 * k - 1)) + series)
    vb = np.where(small, 0.5, v)
    direct = 0.5 * (xlogy(1 + vb, 1 + vb) + xlogy(1 - vb, 1 - vb))
    return _scalar(np.where(small, series, direct))


def renyi_entropy(v, r: float):
    """Order-``r`` Renyi entropy ``ln(p_+^r + p_-^r) / (1 - r)`` with ``p_pm = (1 +- v)/2``.

    This equals ``-r ln2/(1-r) + ln[(1+v)^r + (1-v)^r]/(1-r)``.  ``r == 1`` is
    dispatched to :func:`von_neumann_entropy`.
    """
    if not r > 0:
        raise DomainError(f"Renyi order must be positive, got {r}")
    if r == 1:
        return von_neumann_entropy(v)
    v = _check_length(v)
    p_plus, p_minus = 0.5 * (1 + v), 0.5 * (1 - v)
    return _scalar(np.log(p_plus**r + p_minus**r) / (1.0 - r))


def _kl_poly(z: np.ndarray) -> np.ndarray:
    """``sum_m z^m / ((m + 1)(m + 2))`` for ``|z| <= 1/2``."""
    out = np.zeros_like(z)
    for m in range(_KL_TERMS, -1, -1):
        out = 1.0 / ((m + 1) * (m + 2)) + z * out
    return out


def kl_divergence(v_tilde, v):
    """Relative entropy between the eigenvalue distributions ``(1 +- v~)/2`` and ``(1 +- v)/2``.

    With ``x = v~ - v``, ``s = x / (1 + v)`` and ``r = x / (1 - v)`` the
    divergence is ``x/2 [s P(-s) + r P(r)]``, ``P(z) = sum_m z^m / ((m+1)(m+2))``.
    This form is used when ``|r| <= 1/2``.  There it avoids the closed
    logarithmic form's cancellation of order-``x`` terms down to ``O(x^2)``.
    """
    vt = _check_length(v_tilde, "v_tilde", open_top=True)
    v = _check_length(v, open_top=True)
    x = vt - v
    r = x / (1.0 - v)
    small = np.abs(r) <= 0.5
    xs, rs = np.where(small, x, 0.0), np.where(small, r, 0.0)
    ss = xs / (1.0 + v)
    series = 0.5 * xs * (ss * _kl_poly(-ss) + rs * _kl_poly(rs))
    vtb = np.where(small, 0.5, vt)
    direct = 0.5 * ((1 + vtb) * np.log1p((vtb - v) / (1 + v)) + xlogy(1 - vtb, (1 - vtb) / (1 - v)))
    return _scalar(np.where(small, series, direct))


def coth_minus_one(x: float) -> float:
    """``coth(x) - 1 = 2 / expm1(2x)`` for ``x > 0``, without overflow."""
    if x > 350.0:
        return 2.0 * math.exp(-2.0 * x)
    return 2.0 / math.expm1(2.0 * x)


def _check_time(t: float) -> float:
    t = float(t)
    if not t > 0:
        raise DomainError(f"Fisher information needs t > 0, got {t}")
    return t


def fisher_beta(q: QubitSpec, b: BathSpec, t: float, config=None, *, cache=None) -> float:
    """Fisher information about the inverse temperature,
    ``omega0^4 / 2 * (coth(omega0^2 gamma) - 1) * (d gamma / d beta)^2``."""
    t = _check_time(t)
    w0 = omega0(q)
    g = bi.gamma(b, t, config, cache=cache)
    dg = bi.dgamma_dbeta(b, t, config, cache=cache)
    return 0.5 * w0**4 * coth_minus_one(w0 * w0 * g) * dg * dg


def fisher_omega0(q: QubitSpec, b: BathSpec, t: float, config=None, *, cache=None) -> float:
    """Fisher information about omega0, ``2 omega0^2 (coth(omega0^2 gamma) - 1) gamma^2``."""
    t = _check_time(t)
    w0 = omega0(q)
    g = bi.gamma(b, t, config, cache=cache)
    return 2.0 * w0 * w0 * coth_minus_one(w0 * w0 * g) * g * g


@dataclass(frozen=True)
class FisherSummary:
    s_max: float
    t_max: float
    area: float
    horizon: float = math.nan
    area_error: float = math.nan


def fisher_summary(
    curve: Callable[[float], float],
    horizon: float = 20.0,
    grid: int = 2000,
    *,
    t_min: float = 1e-3,
    t_tol: float = 1e-6,
    refine: Callable[[float], float] | None = None,
) -> FisherSummary:
    """Peak height, peak time and area of a nonnegative curve on ``[t_min, horizon]``.

    The peak is located on the grid and polished by bounded Brent/golden-section
    search to ``|dt| < t_tol``.  The area is a composite Simpson sum on the grid
    halved once (``2 * grid`` panels).  The horizon is doubled while the curve at
    the horizon still exceeds ``1e-9`` of the peak.  ``[0, t_min]`` contributes
    no area.

    ``refine`` evaluates off-grid points during the peak search and defaults to
    ``curve``; pass an uncached variant when ``curve`` memoizes grid nodes.
    """
    if not horizon > t_min:
        raise DomainError("horizon must exceed t_min")
    if grid < 100:
        raise DomainError("grid must have at least 100 panels")
    grid += grid % 2
    refine = refine or curve
    while True:
        ts = np.linspace(t_min, horizon, 2 * grid + 1)
        values = np.array([curve(t) for t in ts])
        peak = values.max()
        if not peak > 0:
            raise EmptyCurve("curve vanishes on the whole grid")
        if values[-1] <= 1e-9 * peak:
            break
        horizon *= 2.0
    i = int(values.argmax())
    lo, hi = ts[max(i - 1, 0)], ts[min(i + 1, ts.size - 1)]
    res = minimize_scalar(lambda t: -refine(t), bounds=(lo, hi), method="bounded",
                          options={"xatol": 0.25 * t_tol})
    t_max, s_max = float(res.x), -float(res.fun)
    if s_max < peak:
        t_max, s_max = float(ts[i]), float(peak)
    area = simpson(values, x=ts)
    coarse = simpson(values[::2], x=ts[::2])
    return FisherSummary(s_max=s_max, t_max=t_max, area=float(area), horizon=float(horizon),
                         area_error=float(abs(area - coarse)))

"""Named parameter sets (fig1 ... fig6, table1) selectable with ``--params-preset``."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError
from .model import BathSpec, QubitSpec, SymmetryClass

__all__ = ["Preset", "PRESETS", "get_preset"]


@dataclass(frozen=True)
class Preset:
    alpha: float
    delta: float
    xi: float
    theta: float
    bath: BathSpec = field(default_factory=BathSpec)
    theta0: float = math.pi / 2
    phi0: float = 0.0
    ratio_at: float | None = None

    def qubit(self, kind: SymmetryClass) -> QubitSpec:
        return QubitSpec(kind, self.alpha, self.delta, self.xi, self.theta)

    def qubits(self) -> dict[SymmetryClass, QubitSpec]:
        return {k: self.qubit(k) for k in SymmetryClass}


_FIG1 = Preset(alpha=1.0, delta=0.56, xi=0.81, theta=0.86)
_FIG6 = Preset(alpha=0.9, delta=0.38, xi=0.8, theta=0.6, theta0=3 * math.pi / 8)
_TABLE1 = Preset(alpha=1.0, delta=0.5, xi=0.8, theta=0.6)

PRESETS: dict[str, Preset] = {
    "fig1": _FIG1,
    "fig2": _FIG1,
    "fig3": Preset(alpha=0.3, delta=0.2, xi=0.12, theta=0.05, ratio_at=1.25),
    "fig4": _TABLE1,
    # fig5 is used with several initial polar angles; pi/2 is the default, others via --theta0.
    "fig5": Preset(alpha=0.5, delta=0.217, xi=0.45, theta=0.488),
    "fig6": _FIG6,
    "fig56": _FIG6,
    "table1": _TABLE1,
}

DEFAULT_PRESET = "fig1"


def get_preset(name: str) -> Preset:
    try:
        return PRESETS[name]
    except KeyError:
        raise DomainError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}") from None

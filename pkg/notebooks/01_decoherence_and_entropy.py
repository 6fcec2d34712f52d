"""Decoherence and entanglement entropy of the three qubit classes.

Run as a script or cell by cell (``# %%`` markers).  Output is printed only.
"""

# %% setup
import math

import numpy as np

from aptqubit import bath_integrals as bi
from aptqubit.dynamics import decoherence_function
from aptqubit.info_measures import entropy_deficit, renyi_entropy, von_neumann_entropy
from aptqubit.model import SymmetryClass, omega0
from aptqubit.presets import get_preset

preset = get_preset("fig1")
bath = preset.bath
qubits = preset.qubits()
cache = bi.BathIntegralCache(bath)
for kind, q in qubits.items():
    print(f"{kind.value:>4}: omega0 = {omega0(q):.6f}")

# %% decoherence function D(t) = exp(-omega0^2 gamma(t))
# The larger omega0, the faster the coherence is lost, so the order of the
# curves follows the order of omega0.
ts = np.linspace(0.0, 5.0, 11)
print(f"{'t':>5} " + " ".join(f"{'D_' + k.value:>12}" for k in qubits))
for t in ts:
    row = [decoherence_function(q, bath, t, cache=cache) for q in qubits.values()]
    print(f"{t:5.2f} " + " ".join(f"{d:12.4e}" for d in row))

# %% von Neumann entropy and its distance from ln 2
# Once D drops below ~1e-8, S itself rounds to ln 2; the deficit ln2 - S stays
# resolvable and keeps the ordering of the classes visible.
print(f"{'t':>5} " + " ".join(f"{'S_' + k.value:>10} {'ln2-S':>10}" for k in qubits))
for t in ts:
    cells = []
    for q in qubits.values():
        v = decoherence_function(q, bath, t, cache=cache)
        cells.append(f"{von_neumann_entropy(v):10.6f} {entropy_deficit(v):10.3e}")
    print(f"{t:5.2f} " + " ".join(cells))
print(f"ln 2 = {math.log(2):.6f}")

# %% Renyi entropy at t = 1.25 as a function of the order
fig3 = get_preset("fig3")
t = fig3.ratio_at
print(f"Renyi entropy at t = {t} (fig3 parameters)")
print(f"{'r':>5} " + " ".join(f"{k.value:>10}" for k in SymmetryClass))
for r in (0.5, 1.0, 2.0, 3.0, 5.0):
    row = [renyi_entropy(decoherence_function(q, fig3.bath, t), r) for q in fig3.qubits().values()]
    print(f"{r:5.1f} " + " ".join(f"{s:10.6f}" for s in row))

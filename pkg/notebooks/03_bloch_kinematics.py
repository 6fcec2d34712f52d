"""Spin-vector motion on the Bloch sphere: radius, azimuth and angular velocity."""

# %% setup
import math

import numpy as np

from aptqubit import bath_integrals as bi
from aptqubit.bloch import (TrajectoryParams, angular_velocity, axis_distance, linear_velocity,
                            normalized_angular_velocity, spin_vector)
from aptqubit.presets import get_preset

preset = get_preset("fig6")
bath = preset.bath
qubits = preset.qubits()
tp = TrajectoryParams(preset.theta0, preset.phi0)
cache = bi.BathIntegralCache(bath)

# %% distance from the z axis shrinks as the coherence decays
ts = np.linspace(0.0, 5.0, 11)
print(f"{'t':>5} " + " ".join(f"{'d_' + k.value:>10}" for k in qubits))
for t in ts:
    print(f"{t:5.2f} " + " ".join(f"{axis_distance(q, bath, tp, t, cache=cache):10.3e}" for q in qubits.values()))

# %% angular velocity in units of 2 omega0, clockwise positive
# A sign change means the precession reverses direction.
grid = np.linspace(0.0, 5.0, 501)
for kind, q in qubits.items():
    w = np.array([normalized_angular_velocity(q, bath, tp, t, cache=cache) for t in grid])
    flips = grid[1:][np.sign(w[1:]) != np.sign(w[:-1])]
    print(f"{kind.value:>4}: w(0)={w[0]:+.3f}  w(5)={w[-1]:+.3f}  reversals at t = {np.round(flips, 3).tolist()}")

# %% trajectory samples and linear speed
for kind, q in qubits.items():
    s = spin_vector(q, bath, tp, 1.0, cache=cache)
    print(f"{kind.value:>4} t=1: s = ({s.sx:+.4f}, {s.sy:+.4f}, {s.sz:+.4f}), "
          f"dphi/dt = {angular_velocity(q, bath, tp, 1.0, cache=cache):+.4f}, "
          f"v = {linear_velocity(q, bath, tp, 1.0, cache=cache):+.4f}")
print(f"s_z stays at cos(theta0) = {math.cos(preset.theta0):.4f}")

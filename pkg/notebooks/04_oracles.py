"""Brute-force cross-checks of the analytic results.

Each check computes the same quantity two independent ways.  The anti-PT
Fock-space check compares against the closed-form dephasing law and does not
agree; the same evolution agrees with the exact coherence obtained by
continuing the Hermitian result to imaginary theta.
"""

# %% setup
import numpy as np

from aptqubit import oracle
from aptqubit.model import BathSpec, SymmetryClass
from aptqubit.presets import get_preset

q_apt = get_preset("table1").qubit(SymmetryClass.ANTI_PT_SYMMETRIC)
single = oracle.DiscreteBathSpec(oracle.SINGLE_MODE, 24, 0.5)
print(f"single mode (omega, g) = {single.modes[0]}, Fock cutoff used = {single.fock_cutoff}")

# %% single-mode anti-PT coherence: Fock evolution vs the two closed forms
fock = oracle.discrete_dephasing_fock_series(single, q_apt, oracle.FOCK_TIMES)
print(f"{'t':>4} {'|Fock|':>10} {'|closed|':>10} {'|similar|':>10} {'arg Fock':>10} {'arg closed':>10}")
for t, f in zip(oracle.FOCK_TIMES, fock):
    c = oracle.discrete_dephasing_exact(single, q_apt, t)
    s = oracle.discrete_dephasing_similarity(single, q_apt, t)
    print(f"{t:4.1f} {abs(f):10.6f} {abs(c):10.6f} {abs(s):10.6f} {np.angle(f):10.6f} {np.angle(c):10.6f}")

# %% the full suite (same as `aptqubit verify`)
for check in oracle.run_suite(BathSpec(), q_apt):
    status = "PASS" if check.passed else "FAIL"
    print(f"{status}  {check.name:<30} {check.discrepancy:.2e}  (tol {check.tolerance:.0e})")

# %% Dyson map conditioning grows with theta t
for theta in (0.3, 1.0, 2.0):
    sample = oracle.dyson_map(single, theta, 0.5, cutoff=24)
    print(f"theta={theta}: cond(eta) = {sample.condition:.3e}")

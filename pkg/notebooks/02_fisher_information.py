"""Fisher information about the bath temperature and about omega0.

Reproduces the peak height, peak time and area of each Fisher curve.
"""

# %% setup
import numpy as np

from aptqubit import bath_integrals as bi
from aptqubit.cli import fisher_table
from aptqubit.info_measures import fisher_beta, fisher_omega0
from aptqubit.oracle import fisher_by_kl
from aptqubit.presets import get_preset

preset = get_preset("table1")
bath = preset.bath
qubits = preset.qubits()
cache = bi.BathIntegralCache(bath)

# %% Fisher curves on a coarse grid
print(f"{'t':>5} " + " ".join(f"{'Fb_' + k.value:>10} {'Fw_' + k.value:>10}" for k in qubits))
for t in np.linspace(0.1, 2.0, 11):
    cells = [f"{fisher_beta(q, bath, t, cache=cache):10.4e} {fisher_omega0(q, bath, t, cache=cache):10.4e}"
             for q in qubits.values()]
    print(f"{t:5.2f} " + " ".join(cells))

# %% summary table: peak, time of peak, area
table = fisher_table(qubits, bath)
print(f"{'class':<6}{'param':<8}{'S_f^max':>10}{'t^max':>10}{'S_f^area':>10}{'area err':>11}")
for (kind, param), s in table.items():
    print(f"{kind.value:<6}{param:<8}{s.s_max:10.4f}{s.t_max:10.4f}{s.area:10.4f}{s.area_error:11.1e}")

# %% cross-check against the curvature of the relative entropy
for kind, q in qubits.items():
    for param, closed in (("beta", fisher_beta), ("omega0", fisher_omega0)):
        exact = closed(q, bath, 0.7)
        kl = fisher_by_kl(q, bath, 0.7, param)
        print(f"{kind.value:>4} {param:<7} closed {exact:.10f}  KL curvature {kl:.10f}  rel {abs(kl - exact) / exact:.1e}")

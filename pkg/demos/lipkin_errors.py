"""
Lipkin model: ground-state error of the angle Hamiltonian
=========================================================

Two sweeps: error against coupling at fixed size, then error against size
at chi = 1. Below chi = 1 the kinetic coefficient turns negative near
phi = pi and those rows are reported as ill-posed rather than solved.
"""
import numpy as np

from spintunnel import analysis, io
from _common import save

for Ns in (10, 20, 40):
    res = analysis.relative_error_curve("lipkin", "chi", np.round(np.arange(0.5, 2.01, 0.1), 10),
                                        {"Ns": Ns}, workers=4)
    ok = [r for r in res.rows if r.status == "ok"]
    print(f"Ns={Ns}: {len(ok)} solved rows, {len(res.rows) - len(ok)} ill-posed;"
          f" error range {min(r.relative_error for r in ok):.3%} .. {max(r.relative_error for r in ok):.3%}")
    save(f"lipkin_chi_sweep_Ns{Ns}.csv", io.sweep_csv(res))

res = analysis.relative_error_curve("lipkin", "Ns", range(4, 41, 2), {"chi": 1.0}, workers=4)
save("lipkin_Ns_sweep.csv", io.sweep_csv(res))
print("\n Ns  relative error")
for r in res.rows:
    print(f"{int(r.parameter_value):3d}  {r.relative_error:.3%}")

# critical coupling where phi = 0 stops being a minimum
for Ns in (4, 10, 20, 100):
    print(f"chi_c(Ns={Ns}) = {analysis.critical_chi(Ns):.6f}")

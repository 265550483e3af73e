"""
Fe8 cluster: a transverse anisotropy opens tunnelling
=====================================================

The inertia never vanishes, so the two wells at 0 and pi are connected,
and the low spectrum is compared level by level with exact
diagonalisation.
"""
import numpy as np

from spintunnel import analysis, angle_hamiltonian as ah, exact_solver, io
from spintunnel.spectral_solver import solve
from spintunnel.spin_models import Fe8, to_spin_params
from _common import save

ham = ah.closed_form_fe8(0.275, 0.046, 10)
save("fe8.csv", io.angle_csv(ham))

exact = exact_solver.spectrum_exact(to_spin_params(Fe8())).values
angle = solve(ham).values
height, _ = analysis.barrier_height(ham, angle[0])
print(f"V max - min = {np.ptp(ham.potential.values):.4f} K, barrier above ground = {height:.4f} K")
print(f"min(-I) = {np.min(-ham.inertia.values):.4f}")
print("\n k   exact [K]     angle [K]    rel. error")
for k in range(12):
    print(f"{k:2d}  {exact[k]:11.5f}  {angle[k]:11.5f}  {analysis.relative_error(angle[k], exact[k]):.3%}")

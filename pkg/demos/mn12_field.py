"""
Mn12-acetate in a longitudinal field
====================================

The field tilts the double well and moves the inertia zeros, which sit
exactly between the wells at h = 0 and block tunnelling there. With h > 0
the inertia changes sign, so only the potential and the diagnostics are
reported for those cases.
"""
import numpy as np

from spintunnel import analysis, angle_hamiltonian as ah, exact_solver, io
from spintunnel.spectral_solver import IllPosedError, solve
from spintunnel.spin_models import Mn12, to_spin_params
from _common import save

for h in (0.0, 0.1, 0.2, 0.3):
    ham = ah.closed_form_mn12(0.6, 10, h)
    save(f"mn12_h{h:.1f}.csv", io.angle_csv(ham))
    ext = analysis.extrema(ham)
    zeros, blocked = analysis.inertia_zeros(ham)
    print(f"h={h:.1f}  minima={np.round(ext['minima'], 4)}  maxima={np.round(ext['maxima'], 4)}"
          f"  I zeros={np.round(zeros, 4)}  blocked={blocked}")
    try:
        e = solve(ham).ground
        exact = exact_solver.spectrum_exact(to_spin_params(Mn12(0.6, 10, h))).ground
        print(f"       E_angle={e:.6f} K  E_exact={exact:.6f} K  error={analysis.relative_error(e, exact):.3%}")
    except IllPosedError as exc:
        print(f"       not solved: {exc}")

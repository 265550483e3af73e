"""Angle-variable Hamiltonians for spin tunnelling in magnetic molecules.

Starting from ``H = A Jz + B Jz^2 + G (J+^2 + J-^2)``, the package builds a
potential ``V(phi)`` and inertia ``I(phi)`` from moments of a discrete
phase-space energy surface, solves the resulting periodic Schroedinger
equation, and compares it with exact diagonalisation.
"""
from .spin_models import Fe8, Lipkin, Mn12, SpinParams, to_spin_params, validate
from .exact_solver import (Spectrum, build_gamma_matrix, build_jm_matrix, diagonalize,
                           spectrum_exact)
from .semiclassical import energy_surface, minimize_xi, semiclassical_minimum
from .gcm_kernels import energy_kernel, lipkin_kernel, overlap_kernel
from .angle_hamiltonian import (AngleFunction, AngleHamiltonian, closed_form, closed_form_fe8,
                                closed_form_lipkin, closed_form_mn12, moments_full_sum,
                                moments_numeric, wigner_surface)
from .spectral_solver import SolverConfig, assemble, solve
from .analysis import (barrier_height, critical_chi, extrema, inertia_zeros,
                       lipkin_inertia_zero_locus, relative_error_curve)

__version__ = "0.1.0"

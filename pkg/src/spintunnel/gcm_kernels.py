"""Generator-coordinate energy and overlap kernels between coherent states.

Kernels are plain evaluators; no Hill-Wheeler equation is solved here.
Arguments may be numpy arrays.
"""
from __future__ import annotations

import numpy as np

from .spin_models import SpinParams


def overlap_kernel(j, theta):
    """``<alpha'|alpha> = cos(theta/2)^(2j)`` with ``theta = alpha' - alpha``."""
    return np.cos(np.asarray(theta, dtype=float) / 2) ** int(round(2 * j))


def energy_kernel(p: SpinParams, alpha, alpha_prime, xi):
    """``<alpha' xi|H|alpha xi>`` for normalised coherent states (complex)."""
    j = p.j
    two_j = int(round(2 * j))
    alpha = np.asarray(alpha, dtype=float)
    alpha_prime = np.asarray(alpha_prime, dtype=float)
    ch = np.cos((alpha_prime - alpha) / 2)
    cs = np.cos((alpha_prime + alpha) / 2)
    # integer powers; cos^(2j-2) vanishes identically for j = 1/2
    c_m1 = ch ** (two_j - 1) if two_j >= 1 else np.zeros_like(ch)
    c_m2 = ch ** (two_j - 2) if two_j >= 2 else np.zeros_like(ch)
    out = (-p.A * j * c_m1 * cs
           + p.B * j / 2 * ch ** two_j
           + p.B * j / 2 * (2 * j - 1) * c_m2 * cs ** 2
           + 2 * p.G * j * (2 * j - 1) * c_m2
           * (np.exp(2j * xi) * np.sin(alpha_prime / 2) ** 2 * np.cos(alpha / 2) ** 2
              + np.exp(-2j * xi) * np.sin(alpha / 2) ** 2 * np.cos(alpha_prime / 2) ** 2))
    return out


def energy_kernel_centered(p: SpinParams, theta, phi_bar, xi):
    """Energy kernel in ``theta = alpha' - alpha``, ``phi_bar = (alpha + alpha')/2``."""
    theta = np.asarray(theta, dtype=float)
    phi_bar = np.asarray(phi_bar, dtype=float)
    return energy_kernel(p, phi_bar - theta / 2, phi_bar + theta / 2, xi)


def lipkin_kernel(chi, Ns, theta, phi_bar):
    """Closed-form Lipkin energy kernel (units of epsilon, phase ``xi = 0``)."""
    if Ns < 2 or Ns % 2:
        raise ValueError(f"Ns must be an even integer >= 2, got {Ns}")
    ch = np.cos(np.asarray(theta, dtype=float) / 2)
    phi_bar = np.asarray(phi_bar, dtype=float)
    return -(Ns / 2) * (ch ** (Ns - 1) * np.cos(phi_bar)
                        + chi / 2 * ch ** (Ns - 2) * ((1 + np.sin(phi_bar) ** 2) - ch ** 2))


def kernel_grid(p: SpinParams, xi, n_theta=65, n_phi=65):
    """Rows ``(theta, phi_bar, Re K, Im K, N)`` on a uniform grid over ``[-pi, pi]``."""
    theta = np.linspace(-np.pi, np.pi, n_theta)
    phi = np.linspace(-np.pi, np.pi, n_phi)
    tt, pp = np.meshgrid(theta, phi, indexing="ij")
    k = energy_kernel_centered(p, tt, pp, xi)
    n = overlap_kernel(p.j, tt)
    return np.column_stack([tt.ravel(), pp.ravel(), k.real.ravel(), k.imag.ravel(), n.ravel()])

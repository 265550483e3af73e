"""Coherent-state energy surface and its minimum."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.special import comb

from .spin_models import SpinParams, check
from .exact_solver import build_jm_matrix, m_values


@dataclass(frozen=True)
class SurfacePoint:
    alpha: float
    xi: float
    energy: float


def coherent_state(j, alpha, xi=0.0):
    """Normalised su(2) coherent state with ``z = tan(alpha/2) exp(-i xi)``.

    Components are ordered ``m = -j, ..., j``; ``alpha = 0`` is ``|j, -j>``.
    """
    m = m_values(j)
    k = np.rint(m + j).astype(int)
    two_j = int(round(2 * j))
    c, s = math.cos(alpha / 2), math.sin(alpha / 2)
    amp = np.sqrt(comb(two_j, k)) * c ** (two_j - k) * s ** k
    return amp * np.exp(-1j * xi * k)


def expectation(p: SpinParams, alpha, xi=0.0):
    """``<jz|H|jz>`` by explicit summation over the |j m> components."""
    psi = coherent_state(p.j, alpha, xi)
    return float(np.real(np.conj(psi) @ build_jm_matrix(p) @ psi))


def energy_surface(p: SpinParams, alpha, xi):
    """Diagonal coherent-state energy ``H(alpha, xi)``; vectorised over angles."""
    alpha = np.asarray(alpha, dtype=float)
    xi = np.asarray(xi, dtype=float)
    j = p.j
    s2 = np.sin(alpha / 2) ** 2
    c2 = np.cos(alpha / 2) ** 2
    out = (-p.A * j * np.cos(alpha)
           + p.B * (j * j - j * (j - 0.5) * np.sin(alpha) ** 2)
           + 4.0 * p.G * j * (2 * j - 1) * s2 * c2 * np.cos(2 * xi))
    return out if out.ndim else float(out)


def minimize_xi(p: SpinParams, alpha=None) -> float:
    """Phase minimising the ``G`` term: ``pi/2`` for ``G > 0``, else ``0``.

    The sign of the ``cos(2 xi)`` coefficient does not depend on ``alpha``,
    so the choice is global.
    """
    return math.pi / 2 if p.G > 0 else 0.0


def alpha_curve(p: SpinParams, alpha):
    """Energy along ``alpha`` with the phase already minimised."""
    return energy_surface(p, alpha, minimize_xi(p))


def semiclassical_minimum(p: SpinParams, n_grid=1024):
    """Global minimum ``(alpha*, E*)`` of the phase-minimised curve.

    A uniform scan over one period is refined by golden-section search
    around the best grid point.
    """
    check(p)
    alpha = np.linspace(-math.pi, math.pi, n_grid, endpoint=False)
    vals = alpha_curve(p, alpha)
    i = int(np.argmin(vals))
    h = alpha[1] - alpha[0]
    f = lambda a: float(alpha_curve(p, a))
    best_a, best_e = float(alpha[i]), float(vals[i])
    lo, hi = best_a - h, best_a + h
    # golden search needs an interior point lower than both ends
    if f(best_a) <= min(f(lo), f(hi)):
        res = minimize_scalar(f, bracket=(lo, best_a, hi), method="golden", tol=1e-12)
        if res.fun <= best_e:
            best_a, best_e = float(res.x), float(res.fun)
    a = abs(math.remainder(best_a, 2 * math.pi))
    return a, best_e


def surface_curve(p: SpinParams, n=1024, xi=None):
    """``(alpha, energy)`` samples over ``[0, pi]`` for plotting."""
    alpha = np.linspace(0.0, math.pi, n)
    xi = minimize_xi(p) if xi is None else xi
    return alpha, energy_surface(p, alpha, np.full_like(alpha, xi))

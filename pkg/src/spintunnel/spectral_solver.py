"""Plane-wave solver for ``[-d/dphi K(phi) d/dphi + V(phi)] psi = E psi``.

In the basis ``exp(i n phi)/sqrt(2 pi)``, ``|n| <= n_max``, the matrix is
``T[m, n] = m n K_(m-n) + V_(m-n)`` where ``f_q`` are Fourier coefficients.
The mass never appears explicitly, so inertia zeros are just zeros of ``K``.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from . import linalg
from .angle_hamiltonian import AngleHamiltonian, angle_grid
from .exact_solver import Spectrum


class IllPosedError(ValueError):
    """The kinetic coefficient is negative somewhere on the circle."""


@dataclass(frozen=True)
class SolverConfig:
    n_max: int = 64
    quadrature_points: Optional[int] = None
    eig_count: Optional[int] = None
    # levels compared when checking convergence against 2 * n_max
    check_levels: int = 6

    @property
    def n_quad(self) -> int:
        return self.quadrature_points or 8 * self.n_max

    def __post_init__(self):
        if self.n_max < 4:
            raise ValueError("n_max must be at least 4 (twice the degree of V and I)")
        if self.n_quad < 4 * self.n_max:
            raise ValueError("quadrature_points must be >= 4 * n_max")


def _coefficients(values):
    """``c_q`` for ``q = 0..n-1`` (FFT order) of samples on ``[-pi, pi)``."""
    n = values.size
    q = np.fft.fftfreq(n, 1.0 / n)
    return np.fft.fft(values) / n * np.where(q.astype(int) % 2, -1.0, 1.0)


def assemble(h: AngleHamiltonian, cfg: SolverConfig = SolverConfig()) -> np.ndarray:
    """Hermitian plane-wave matrix of size ``2 n_max + 1``.

    Raises
    ------
    IllPosedError
        If ``K < -1e-12`` anywhere on the quadrature or sample grid.
    ValueError
        If ``V`` or ``K`` carries Fourier weight above 1e-10 at ``|q| >= n_max``.
    """
    phi = angle_grid(cfg.n_quad)
    K = h.kinetic_coeff(phi)
    V = h.potential(phi)
    k_min = min(float(np.min(K)), float(np.min(h.kinetic_coeff.values)))
    if k_min < -1e-12:
        raise IllPosedError(
            f"kinetic coefficient K = -I/2 reaches {k_min:.6g} < 0; "
            "the operator is unbounded below in that region")
    kc, vc = _coefficients(K), _coefficients(V)
    nq = cfg.n_quad
    q = np.fft.fftfreq(nq, 1.0 / nq).astype(int)
    tail = np.abs(q) >= cfg.n_max
    scale = max(1.0, float(np.max(np.abs(vc))), float(np.max(np.abs(kc))))
    if max(np.max(np.abs(kc[tail])), np.max(np.abs(vc[tail]))) > 1e-10 * scale:
        raise ValueError("V or K is not resolved by n_max plane waves; increase n_max")
    n = np.arange(-cfg.n_max, cfg.n_max + 1)
    diff = np.subtract.outer(n, n) % nq
    mat = np.outer(n, n) * kc[diff] + vc[diff]
    # exact Hermitian symmetrisation removes rounding asymmetry
    return 0.5 * (mat + mat.conj().T)


def _eig(mat, vectors):
    imag = float(np.max(np.abs(mat.imag)))
    tol = 1e-14 * max(1.0, float(np.max(np.abs(mat))))
    if imag <= tol:
        return linalg.eigh(mat.real, vectors=vectors)
    return linalg.hermitian_eigh(mat, vectors=vectors)


def solve(h: AngleHamiltonian, cfg: SolverConfig = SolverConfig(), vectors=False,
          check_convergence=True, tol=1e-8) -> Spectrum:
    """Eigenvalues of the angle Hamiltonian, ascending.

    With ``check_convergence`` the problem is re-solved at ``2 n_max`` and
    the largest drift of the lowest ``cfg.check_levels`` levels is stored on
    the result. States living near a zero of ``K`` converge slowly in any
    basis, so the check is restricted to the low-lying part.
    """
    mat = assemble(h, cfg)
    w, v = _eig(mat, vectors)
    count = cfg.eig_count or w.size
    spec = Spectrum(values=w[:count], vectors=None if v is None else v[:, :count],
                    source="angle_spectral", unit=h.unit, dimension=count,
                    meta={"n_max": cfg.n_max, "form": h.form})
    if check_convergence:
        big = replace(cfg, n_max=2 * cfg.n_max,
                      quadrature_points=2 * cfg.quadrature_points if cfg.quadrature_points else None)
        w2, _ = _eig(assemble(h, big), False)
        m = min(count, cfg.check_levels)
        drift = float(np.max(np.abs(w2[:m] - w[:m]))) if m else 0.0
        spec.drift = drift
        spec.converged = drift < tol
    return spec


def eigenfunctions(spec: Spectrum, n_max, phi=None):
    """Reconstruct ``psi_k(phi)`` from plane-wave eigenvectors (columns)."""
    if spec.vectors is None:
        raise ValueError("spectrum carries no eigenvectors; solve with vectors=True")
    phi = angle_grid(1024) if phi is None else np.asarray(phi, dtype=float)
    n = np.arange(-n_max, n_max + 1)
    basis = np.exp(1j * np.multiply.outer(phi, n)) / np.sqrt(2 * np.pi)
    return phi, basis @ spec.vectors

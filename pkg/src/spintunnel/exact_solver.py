"""Exact spectra: the |j m> matrix and the Gamma-function representation.

The Gamma-function matrix is the Hamiltonian written in a rotated basis
(``Jz -> -Jx``); it has the same spectrum as the |j m> matrix and serves as an
independent cross-check of the exact path.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.special import gammaln

from . import linalg
from .spin_models import SpinParams, check

SOURCES = ("exact_jm", "gamma_rep", "angle_spectral")


@dataclass
class Spectrum:
    """Ascending eigenvalues of one solver path, tagged with their origin."""

    values: np.ndarray
    source: str
    unit: str = "epsilon"
    vectors: Optional[np.ndarray] = None
    dimension: int = 0
    converged: Optional[bool] = None
    drift: Optional[float] = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.source not in SOURCES:
            raise ValueError(f"unknown spectrum source {self.source!r}")
        if not self.dimension:
            self.dimension = self.values.size

    @property
    def ground(self) -> float:
        return float(self.values[0])

    def __len__(self):
        return self.values.size


def m_values(j):
    """Projections ``-j, -j+1, ..., j``."""
    two_j = int(round(2 * j))
    return (np.arange(two_j + 1) - two_j / 2.0)


def _ladder(j, m):
    """<m+1|J+|m> = sqrt((j - m)(j + m + 1))."""
    return np.sqrt(np.clip((j - m) * (j + m + 1), 0.0, None))


def build_jm_matrix(p: SpinParams) -> np.ndarray:
    """Real symmetric matrix of ``A Jz + B Jz^2 + G (J+^2 + J-^2)`` on |j m>.

    Rows and columns are ordered ``m = -j, ..., j``.
    """
    check(p)
    m = m_values(p.j)
    n = m.size
    mat = np.diag(p.A * m + p.B * m * m)
    if n > 2 and p.G != 0.0:
        mm = m[:-2]
        # <m+2|J+^2|m> as the product of two single ladder steps
        off = p.G * _ladder(p.j, mm) * _ladder(p.j, mm + 1)
        idx = np.arange(n - 2)
        mat[idx + 2, idx] = off
        mat[idx, idx + 2] = off
    return mat


def _symmetry_defect(mat):
    mat = np.asarray(mat)
    scale = max(1.0, float(np.max(np.abs(mat), initial=0.0)))
    return float(np.max(np.abs(mat - mat.conj().T), initial=0.0)) / scale


def diagonalize(mat, vectors=False, source="exact_jm", unit="epsilon") -> Spectrum:
    """Diagonalise a real symmetric (or complex Hermitian) matrix.

    Raises
    ------
    ValueError
        If the matrix is not symmetric to 1e-12 relative.
    """
    mat = np.asarray(mat)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError("matrix must be square")
    if _symmetry_defect(mat) > 1e-12:
        raise ValueError("matrix is not symmetric/Hermitian to 1e-12")
    if np.iscomplexobj(mat):
        w, v = linalg.hermitian_eigh(mat, vectors=vectors)
    else:
        w, v = linalg.eigh(mat, vectors=vectors)
    return Spectrum(values=w, vectors=v, source=source, unit=unit, dimension=mat.shape[0])


def spectrum_exact(p: SpinParams, vectors=False) -> Spectrum:
    """Exact spectrum of the operator Hamiltonian in the |j m> basis."""
    return diagonalize(build_jm_matrix(p), vectors=vectors, source="exact_jm", unit=p.unit)


def parity_blocks(p: SpinParams):
    """Split the |j m> matrix into the two blocks coupling ``m`` of one parity."""
    mat = build_jm_matrix(p)
    idx = np.arange(mat.shape[0])
    even, odd = idx[idx % 2 == 0], idx[idx % 2 == 1]
    return mat[np.ix_(even, even)], mat[np.ix_(odd, odd)]


def _gamma_ratio(log_s, a, b):
    """``exp(log_s) / (Gamma(a) Gamma(b))`` with ``1/Gamma`` of a pole equal to 0."""
    for x in (a, b):
        if x <= 0 and float(x).is_integer():
            return 0.0
    sign = 1.0
    for x in (a, b):
        if x < 0 and math.floor(x) % 2 == 0:
            # Gamma is negative on (-2k-1, -2k)
            sign = -sign
    return sign * math.exp(log_s - gammaln(a) - gammaln(b))


def build_gamma_matrix(p: SpinParams, literal=False) -> np.ndarray:
    """Hamiltonian matrix in the Gamma-function representation.

    Indices ``n, n'`` run over ``-j, ..., j``. With ``literal=True`` the
    ``G j (2j-1)`` diagonal term keeps the sign it is usually printed with;
    that variant is off by the constant ``2 G j (2j-1)`` from the |j m>
    spectrum. The default flips the sign of that term, which restores exact
    equivalence (see :func:`gamma_discrepancy`).
    """
    check(p)
    j = p.j
    ns = m_values(j)
    size = ns.size
    mat = np.zeros((size, size))

    def log_s(n, n2):
        return 0.5 * (gammaln(j + n + 1) + gammaln(j - n + 1) + gammaln(j + n2 + 1) + gammaln(j - n2 + 1))

    g_diag_sign = 1.0 if literal else -1.0
    for a, n in enumerate(ns):
        for b, n2 in enumerate(ns):
            k = int(round(n2 - n))
            if abs(k) > 2:
                continue
            ls = log_s(n, n2)
            half = (n + n2) / 2.0
            val = 0.0
            if abs(k) == 1:
                val += -p.A / 2.0 * _gamma_ratio(ls, (2 * j + 1) / 2 + half, (2 * j + 1) / 2 - half)
            if k == 0:
                r1 = _gamma_ratio(ls, j + half + 1, j - half + 1)
                val += p.B * j / 2.0 * r1
                val += g_diag_sign * p.G * j * (2 * j - 1) * r1
            if k in (0, 2, -2):
                r0 = _gamma_ratio(ls, j + half, j - half)
                val += p.B / 4.0 * r0 * (2.0 if k == 0 else 1.0)
                val += p.G / 2.0 * r0 * (6.0 if k == 0 else -1.0)
            mat[a, b] = val
    return mat


def spectrum_gamma(p: SpinParams, literal=False) -> Spectrum:
    return diagonalize(build_gamma_matrix(p, literal=literal), source="gamma_rep", unit=p.unit)


def gamma_discrepancy(p: SpinParams) -> dict:
    """Compare both Gamma-representation variants against the |j m> spectrum.

    Returns the maximal eigenvalue deviation of the literal and corrected
    matrices and the constant shift ``2 G j (2j - 1)`` the literal form
    carries.
    """
    exact = spectrum_exact(p).values
    lit = spectrum_gamma(p, literal=True).values
    cor = spectrum_gamma(p, literal=False).values
    shift = 2.0 * p.G * p.j * (2 * p.j - 1)
    return {
        "j": p.j,
        "literal_max_dev": float(np.max(np.abs(lit - exact))),
        "corrected_max_dev": float(np.max(np.abs(cor - exact))),
        "predicted_shift": shift,
        "literal_minus_shift_max_dev": float(np.max(np.abs(lit - shift - exact))),
        "corrected_term": "G*j*(2j-1) diagonal term enters with a minus sign",
    }

"""Angle-variable Hamiltonian: potential V(phi) and inertia I(phi).

Three routes produce the pair:

* ``moments_numeric`` samples the discrete phase-space energy surface
  ``H(u, phi)`` and takes its zeroth and ``sin^2 u`` moments;
* ``moments_full_sum`` evaluates the same moments through the finite double
  sums over ``n, k``;
* ``closed_form_*`` are the large-spin limits for the three presets.

Throughout, the coherent-state phase is eliminated by replacing
``G cos(2 xi)`` with ``-|G|``. The kinetic coefficient is ``K = -I/2``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .semiclassical import minimize_xi
from .spin_models import Fe8, Lipkin, Mn12, SpinParams, check, to_spin_params

FORMS = ("full_sum", "wigner_numeric", "large_n_closed")
DEFAULT_GRID = 1024
DEFAULT_NMAX = 8


def angle_grid(n=DEFAULT_GRID):
    """``n`` uniform samples of ``[-pi, pi)``."""
    return -math.pi + 2 * math.pi * np.arange(n) / n


class AngleFunction:
    """Real 2pi-periodic function held as samples plus Fourier coefficients.

    ``fourier[n_max + q]`` is the coefficient of ``exp(i q phi)``.
    """

    def __init__(self, values, n_max=DEFAULT_NMAX, tol=1e-8):
        values = np.asarray(values)
        if np.iscomplexobj(values):
            if np.max(np.abs(values.imag), initial=0.0) > 1e-9:
                raise ValueError("AngleFunction values must be real")
            values = values.real
        self.values = np.asarray(values, dtype=float)
        self.grid = angle_grid(self.values.size)
        self.n_max = int(n_max)
        self.fourier = _fourier(self.values, self.n_max)
        self.residual = float(np.max(np.abs(self._series(self.grid) - self.values), initial=0.0))
        if self.residual > tol * max(1.0, float(np.max(np.abs(self.values), initial=0.0))):
            raise ValueError(
                f"Fourier reconstruction error {self.residual:.3g} exceeds {tol:g}; raise n_max")

    @classmethod
    def from_callable(cls, f: Callable, n_grid=DEFAULT_GRID, n_max=DEFAULT_NMAX):
        return cls(f(angle_grid(n_grid)), n_max=n_max)

    def _series(self, phi):
        q = np.arange(-self.n_max, self.n_max + 1)
        phi = np.asarray(phi, dtype=float)
        return np.real(np.exp(1j * np.multiply.outer(phi, q)) @ self.fourier)

    def __call__(self, phi):
        out = self._series(phi)
        return out if np.ndim(out) else float(out)

    def derivative(self, phi, order=1):
        q = np.arange(-self.n_max, self.n_max + 1)
        phi = np.asarray(phi, dtype=float)
        out = np.real(np.exp(1j * np.multiply.outer(phi, q)) @ (self.fourier * (1j * q) ** order))
        return out if np.ndim(out) else float(out)

    def coefficient(self, q):
        if abs(q) > self.n_max:
            return 0.0
        return self.fourier[self.n_max + q]

    def reality_defect(self):
        return float(np.max(np.abs(self.fourier - np.conj(self.fourier[::-1])), initial=0.0))

    def __neg__(self):
        return AngleFunction(-self.values, n_max=self.n_max)

    def scaled(self, c):
        return AngleFunction(c * self.values, n_max=self.n_max)

    def sup_distance(self, other: "AngleFunction"):
        return float(np.max(np.abs(self.values - other(self.grid))))

    def __repr__(self):
        return f"AngleFunction(n={self.values.size}, n_max={self.n_max})"


def _fourier(values, n_max):
    """Trapezoidal Fourier coefficients on the ``[-pi, pi)`` grid."""
    n = values.size
    c = np.fft.fft(values) / n
    q = np.arange(-n_max, n_max + 1)
    # grid starts at -pi: shift by exp(i q pi) = (-1)^q
    return c[q % n] * np.where(q % 2, -1.0, 1.0)


@dataclass
class AngleHamiltonian:
    potential: AngleFunction
    inertia: AngleFunction
    model: Optional[SpinParams]
    form: str
    unit: str = "epsilon"
    xi: float = 0.0
    kinetic_coeff: AngleFunction = field(init=False)

    def __post_init__(self):
        if self.form not in FORMS:
            raise ValueError(f"unknown form {self.form!r}")
        self.kinetic_coeff = AngleFunction(-0.5 * self.inertia.values, n_max=self.inertia.n_max)

    @property
    def grid(self):
        return self.potential.grid

    def table(self):
        """Columns ``phi, V, I, K`` on the sample grid."""
        return np.column_stack([self.grid, self.potential.values,
                                self.inertia.values, self.kinetic_coeff.values])


def _from_callables(V, I, model, form, unit, xi=0.0, n_grid=DEFAULT_GRID, n_max=DEFAULT_NMAX):
    return AngleHamiltonian(potential=AngleFunction.from_callable(V, n_grid, n_max),
                            inertia=AngleFunction.from_callable(I, n_grid, n_max),
                            model=model, form=form, unit=unit, xi=xi)


# ----------------------------------------------------------------------------
# discrete phase-space surface and its moments

def _require_integer_j(p):
    check(p)
    if not p.is_integer_spin:
        raise ValueError("moment expansion needs integer j (u grid m = -j..j)")


def _surface_blocks(p: SpinParams, u):
    """The three phi-independent l-sums of the phase-space energy surface.

    Returns ``(c0, cA, c2)`` with ``H(u, phi) = c0 + cA cos(phi) + c2 cos(2 phi)``.
    Diagonal (``k = 0``) and ``k = +-2`` blocks sum over even ``l``; the
    ``k = +-1`` block sums over odd ``l``.
    """
    j = p.j
    g = abs(p.G)
    u = np.asarray(u, dtype=float)
    l_even = np.arange(-2 * j, 2 * j + 1, 2)
    l_odd = np.arange(-2 * j + 1, 2 * j, 2)
    ph_even = np.exp(0.5j * np.multiply.outer(u, l_even))
    ph_odd = np.exp(0.5j * np.multiply.outer(u, l_odd))
    c0 = ((p.B * j / 2 + g * j * (2 * j - 1)) * ph_even.sum(axis=-1)
          + (p.B / 2 - 3 * g) * (ph_even @ (j * j - l_even ** 2 / 4)))
    w_a = np.sqrt((j + l_odd / 2 + 0.5) * (j - l_odd / 2 + 0.5))
    cA = -p.A * (ph_odd @ w_a)
    w_2 = np.sqrt(np.clip((j + l_even / 2 + 1) * (j + l_even / 2)
                          * (j - l_even / 2 + 1) * (j - l_even / 2), 0.0, None))
    c2 = (p.B / 2 + g) * (ph_even @ w_2)
    return c0 / (2 * np.pi), cA / (2 * np.pi), c2 / (2 * np.pi)


def wigner_surface(p: SpinParams, u, phi):
    """Phase-space energy surface ``H(u, phi)`` (complex; real up to rounding)."""
    _require_integer_j(p)
    c0, cA, c2 = _surface_blocks(p, u)
    phi = np.asarray(phi, dtype=float)
    return c0 + cA * np.cos(phi) + c2 * np.cos(2 * phi)


def u_grid(j):
    """``u_m = m * 2pi/(2j+1)`` for ``m = -j..j`` and the spacing."""
    n = int(round(2 * j)) + 1
    du = 2 * np.pi / n
    return (np.arange(n) - (n - 1) / 2) * du, du


def surface_moment(p: SpinParams, power=0, n_grid=DEFAULT_GRID):
    """``sum_u H(u, phi) sin(u)^power du`` sampled on the phi grid."""
    _require_integer_j(p)
    u, du = u_grid(p.j)
    c0, cA, c2 = _surface_blocks(p, u)
    w = np.sin(u) ** power * du
    m0, mA, m2 = (np.sum(c * w) for c in (c0, cA, c2))
    imag = max(abs(m0.imag), abs(mA.imag), abs(m2.imag))
    if imag > 1e-6:
        raise ArithmeticError(f"moment has imaginary residue {imag:.3g}")
    phi = angle_grid(n_grid)
    return m0.real + mA.real * np.cos(phi) + m2.real * np.cos(2 * phi)


def moments_numeric(p: SpinParams, n_grid=DEFAULT_GRID) -> AngleHamiltonian:
    """V and I from numerical moments of the sampled phase-space surface."""
    V = surface_moment(p, 0, n_grid)
    I = surface_moment(p, 2, n_grid)
    return AngleHamiltonian(AngleFunction(V), AngleFunction(I), model=p,
                            form="wigner_numeric", unit=p.unit, xi=minimize_xi(p))


def truncation_ratio(p: SpinParams, n_grid=DEFAULT_GRID):
    """Sup-norm of the ``sin^4 u`` moment relative to the ``sin^2 u`` moment.

    Diagnostic only: the fourth moment never enters the Hamiltonian.
    """
    m2 = surface_moment(p, 2, n_grid)
    m4 = surface_moment(p, 4, n_grid)
    den = float(np.max(np.abs(m2)))
    return float(np.max(np.abs(m4))) / den if den else math.inf


# ----------------------------------------------------------------------------
# finite double sums

def _fsum_complex(terms):
    terms = np.ravel(terms)
    return complex(math.fsum(terms.real), math.fsum(terms.imag))


def _radial_weights(j):
    n = np.arange(-j, j + 1)
    jj = j * (j + 1)
    return n, np.sqrt(np.clip(1 - n * (n + 1) / jj, 0.0, None))


def potential_field_sum(j):
    """``sqrt(j(j+1))/N sum_{n,k} exp(2 pi i k (n + 1/2)/N) sqrt(1 - n(n+1)/(j(j+1)))``.

    The coefficient of ``-A cos(phi)`` in V.
    """
    N = int(round(2 * j)) + 1
    n, w = _radial_weights(j)
    k = np.arange(-j, j + 1)
    terms = np.exp(2j * np.pi * np.multiply.outer(k, n + 0.5) / N) * w
    s = _fsum_complex(terms)
    return math.sqrt(j * (j + 1)) / N * s.real, s.imag


def inertia_field_sum(j):
    """Coefficient of ``A cos(phi)`` in I from the second-moment double sum."""
    N = int(round(2 * j)) + 1
    n, w = _radial_weights(j)
    k = np.arange(-j, j + 1)
    kn = np.multiply.outer(k, np.ones_like(n))
    nn = np.multiply.outer(np.ones_like(k), n)
    phase = np.exp(1j * np.pi * kn / N)
    bracket = (np.exp(2j * np.pi * kn * (nn + 2) / N) + np.exp(2j * np.pi * kn * (nn - 2) / N)
               - 2 * np.exp(2j * np.pi * kn * nn / N))
    s = _fsum_complex(phase * bracket * w)
    return math.sqrt(j * (j + 1)) / (4 * N) * s.real, s.imag


def moments_full_sum(p: SpinParams, n_grid=DEFAULT_GRID) -> AngleHamiltonian:
    """V and I from the finite double sums over ``n, k in -j..j``."""
    _require_integer_j(p)
    j = p.j
    g = abs(p.G)
    jj = j * (j + 1)
    aV, imV = potential_field_sum(j)
    aI, imI = inertia_field_sum(j)
    if max(abs(imV), abs(imI)) > 1e-6:
        raise ArithmeticError("double sum has a non-negligible imaginary part")
    v_const = j * (p.B + 2 * g * (2 * j - 1)) / 2 + (p.B - 6 * g) / 2 * j * j
    v_cos2 = (p.B + 2 * g) / 2 * jj
    # sqrt((1 - 6/jj)(1 - 2/jj)); vanishes at j = 1 where the l = +-4 terms are absent
    root = math.sqrt(max((1 - 6 / jj) * (1 - 2 / jj), 0.0))
    i_const = p.B - 6 * g
    i_cos2 = -(p.B + 2 * g) / 4 * jj * (root - 1)
    V = lambda phi: v_const - p.A * aV * np.cos(phi) + v_cos2 * np.cos(2 * phi)
    I = lambda phi: i_const + p.A * aI * np.cos(phi) + i_cos2 * np.cos(2 * phi)
    return _from_callables(V, I, p, "full_sum", p.unit, minimize_xi(p), n_grid)


# ----------------------------------------------------------------------------
# large-spin closed forms

def lipkin_potential(chi, Ns):
    return lambda phi: -(Ns + 1) / 2 * np.cos(phi) - chi * (Ns + 3) / 4 * np.sin(phi) ** 2


def lipkin_inertia(chi, Ns):
    return lambda phi: -2 / (Ns - 1) * np.cos(phi) - 2 * chi / (Ns - 1) * (1 + np.sin(phi) ** 2)


def atdhf_lipkin_potential(chi, Ns):
    """Mean-field (ATDHF) Lipkin potential, kept as a comparison curve."""
    return lambda phi: -(Ns / 2) * (np.cos(phi) + chi / 2 * np.sin(phi) ** 2)


def closed_form_lipkin(chi, Ns, n_grid=DEFAULT_GRID) -> AngleHamiltonian:
    if Ns < 2 or Ns % 2:
        raise ValueError(f"Ns must be an even integer >= 2, got {Ns}")
    p = to_spin_params(Lipkin(chi=chi, Ns=Ns))
    return _from_callables(lipkin_potential(chi, Ns), lipkin_inertia(chi, Ns), p,
                           "large_n_closed", "epsilon", minimize_xi(p), n_grid)


def closed_form_mn12(D, S, h, n_grid=DEFAULT_GRID) -> AngleHamiltonian:
    """Mn12-acetate with parallel field ``h = H_par/H_a`` (Kelvin)."""
    p = to_spin_params(Mn12(D=D, S=S, h=h))
    ss = S * (S + 1)
    V = lambda phi: -ss * D * np.cos(phi) ** 2 - 2 * D * S * math.sqrt(ss) * h * np.cos(phi)
    I = lambda phi: -2 * D * np.cos(phi) ** 2 - 2 * D * h * np.cos(phi)
    return _from_callables(V, I, p, "large_n_closed", "kelvin", 0.0, n_grid)


def closed_form_fe8(D, E, S, n_grid=DEFAULT_GRID) -> AngleHamiltonian:
    p = to_spin_params(Fe8(D=D, E=E, S=S))
    ss = S * (S + 1)
    V = lambda phi: -(D - E) * ss * np.cos(phi) ** 2 - E * ss
    I = lambda phi: -2 * (D - E) * np.cos(phi) ** 2 - 4 * E
    return _from_callables(V, I, p, "large_n_closed", "kelvin", minimize_xi(p), n_grid)


def closed_form(preset, n_grid=DEFAULT_GRID) -> AngleHamiltonian:
    if isinstance(preset, Lipkin):
        return closed_form_lipkin(preset.chi, preset.Ns, n_grid)
    if isinstance(preset, Mn12):
        return closed_form_mn12(preset.D, preset.S, preset.h, n_grid)
    if isinstance(preset, Fe8):
        return closed_form_fe8(preset.D, preset.E, preset.S, n_grid)
    raise TypeError(f"no closed form for {type(preset).__name__}")


def build(preset_or_params, form="closed", n_grid=DEFAULT_GRID) -> AngleHamiltonian:
    """Dispatch on ``form`` in ``{"closed", "full", "wigner"}`` (or the long tags)."""
    form = {"closed": "large_n_closed", "full": "full_sum", "wigner": "wigner_numeric"}.get(form, form)
    if form == "large_n_closed":
        return closed_form(preset_or_params, n_grid)
    p = preset_or_params
    if not isinstance(p, SpinParams):
        p = to_spin_params(p)
    if form == "full_sum":
        return moments_full_sum(p, n_grid)
    if form == "wigner_numeric":
        return moments_numeric(p, n_grid)
    raise ValueError(f"unknown form {form!r}")

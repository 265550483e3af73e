"""Diagnostics on angle Hamiltonians: errors, barriers, extrema, blocking."""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from scipy.optimize import brentq

from .angle_hamiltonian import AngleFunction, AngleHamiltonian, angle_grid, closed_form, lipkin_potential
from .exact_solver import spectrum_exact
from .spectral_solver import SolverConfig, solve
from .spin_models import Fe8, Lipkin, Mn12, preset_from_name, to_spin_params

SWEEP_COLUMNS = ("parameter_value", "ground_exact", "ground_angle", "relative_error",
                 "barrier_height", "inertia_min", "blocked", "status")


@dataclass
class SweepRow:
    parameter_value: float
    ground_exact: float = math.nan
    ground_angle: float = math.nan
    relative_error: float = math.nan
    barrier_height: float = math.nan
    inertia_min: float = math.nan
    blocked: bool = False
    status: str = "ok"

    def as_tuple(self):
        return tuple(getattr(self, c) for c in SWEEP_COLUMNS)


@dataclass
class SweepResult:
    parameter_name: str
    rows: list = field(default_factory=list)
    unit: str = "epsilon"
    family: str = ""

    def column(self, name):
        return np.array([getattr(r, name) for r in self.rows])


def relative_error(approx, exact):
    return abs(approx - exact) / abs(exact) if exact != 0 else math.inf


# ----------------------------------------------------------------------------
# circle root finding

def _wrap(phi):
    """Map onto ``(-pi, pi]``."""
    w = math.remainder(phi, 2 * math.pi)
    if abs(w) < 1e-14:
        return 0.0
    return math.pi if w <= -math.pi + 1e-15 else w


def _dedupe(angles, tol=1e-7):
    out = []
    for a in sorted(_wrap(x) for x in angles):
        if not any(abs(math.remainder(a - b, 2 * math.pi)) < tol for b in out):
            out.append(a)
    return out


def _circle_roots(f, n=2048):
    """Roots of a smooth periodic ``f`` from sign changes on a uniform grid.

    Grid values within ``1e-13`` of the function's scale count as roots.
    """
    phi = angle_grid(n)
    vals = np.asarray(f(phi), dtype=float)
    atol = 1e-13 * max(1.0, float(np.max(np.abs(vals))))
    vals = np.where(np.abs(vals) <= atol, 0.0, vals)
    h = 2 * math.pi / n
    roots = []
    for i in range(n):
        a, fa, fb = phi[i], vals[i], vals[(i + 1) % n]
        if fa == 0.0:
            roots.append(a)
        elif fa * fb < 0:
            lo, hi = float(f(a)), float(f(a + h))
            if lo * hi < 0:
                roots.append(brentq(f, a, a + h, xtol=1e-15, rtol=1e-15))
            else:
                roots.append(a if abs(lo) <= abs(hi) else a + h)
    return _dedupe(roots)


def extrema(h: AngleHamiltonian, n=2048):
    """Minima and maxima of the potential as angles in ``(-pi, pi]``."""
    V = h.potential
    if np.ptp(V.values) < 1e-12:
        return {"minima": [], "maxima": []}
    crit = _circle_roots(lambda x: V.derivative(x, 1), n)
    minima, maxima = [], []
    for c in crit:
        # Newton polish on V'
        for _ in range(3):
            d2 = V.derivative(c, 2)
            if d2 == 0:
                break
            c -= V.derivative(c, 1) / d2
        curv = V.derivative(c, 2)
        (minima if curv > 0 else maxima if curv < 0 else []).append(_wrap(c))
    return {"minima": _dedupe(minima), "maxima": _dedupe(maxima)}


def inertia_zeros(h: AngleHamiltonian, n=2048):
    """Zeros of ``I(phi)`` and whether they block tunnelling between wells.

    Simple zeros come from sign changes; double zeros are found as roots of
    ``I'`` where ``|I| < 1e-10`` and ``|I'| < 1e-8``. The result is blocked
    when every arc of the circle joining two adjacent potential minima
    contains a zero.
    """
    I = h.inertia
    zeros = list(_circle_roots(I, n))
    for c in _circle_roots(lambda x: I.derivative(x, 1), n):
        if abs(I(c)) < 1e-10 and abs(I.derivative(c, 1)) < 1e-8:
            zeros.append(c)
    zeros = _dedupe(zeros)
    minima = extrema(h, n)["minima"]
    return zeros, _separates(minima, zeros)


def _separates(minima, zeros):
    if len(minima) < 2 or not zeros:
        return False
    two_pi = 2 * math.pi
    mins = sorted(m % two_pi for m in minima)
    zs = [z % two_pi for z in zeros]
    for i, a in enumerate(mins):
        b = mins[(i + 1) % len(mins)]
        span = (b - a) % two_pi or two_pi
        if not any(0 < (z - a) % two_pi < span for z in zs):
            return False
    return True


def lipkin_inertia_zero_locus(chi):
    """Zero of ``cos(phi) + chi (1 + sin^2 phi)`` in ``(0, pi]``, or ``None``.

    With ``c = cos(phi)`` the condition is ``chi c^2 - c - 2 chi = 0``; the
    root is taken in rationalised form to avoid cancellation at small chi.
    """
    if chi < 0:
        raise ValueError("chi must be >= 0")
    c = -4 * chi / (1 + math.sqrt(1 + 8 * chi * chi))
    if c < -1 - 1e-14:
        return None
    return math.acos(max(c, -1.0))


def barrier_height(h: AngleHamiltonian, ground_energy):
    """``(max V - E_ground, has_barrier)``; ``(0, False)`` for a flat or sunken V."""
    ext = extrema(h)
    if not ext["maxima"]:
        return 0.0, False
    vmax = max(h.potential(m) for m in ext["maxima"])
    if vmax <= ground_energy:
        return 0.0, False
    return float(vmax - ground_energy), True


def critical_chi(Ns, verify=True):
    """Lipkin coupling ``(Ns+1)/(Ns+3)`` where the ``phi = 0`` minimum turns over.

    With ``verify`` the sign change of the numerical curvature of the
    closed-form potential at ``phi = 0`` is bracketed and checked against
    the formula to 1e-6.
    """
    if Ns < 2 or Ns % 2:
        raise ValueError(f"Ns must be an even integer >= 2, got {Ns}")
    chi_c = (Ns + 1) / (Ns + 3)
    if verify:
        num = critical_chi_numeric(Ns)
        if abs(num - chi_c) > 1e-6:
            raise ArithmeticError(f"curvature root {num} disagrees with {chi_c}")
    return chi_c


def curvature_at_origin(chi, Ns, step=1e-2):
    """Richardson-extrapolated second difference of the closed-form Lipkin V at 0."""
    V = lipkin_potential(chi, Ns)

    def d2(s):
        return (V(s) - 2 * V(0.0) + V(-s)) / s ** 2

    return (4 * d2(step / 2) - d2(step)) / 3


def critical_chi_numeric(Ns):
    return brentq(lambda c: curvature_at_origin(c, Ns), 0.0, 2.0, xtol=1e-14)


# ----------------------------------------------------------------------------
# sweeps

def _make_preset(family, parameter, value, fixed):
    kw = dict(fixed)
    kw[parameter] = value
    return preset_from_name(family, **kw)


def evaluate_row(family, parameter, value, fixed, cfg=SolverConfig()):
    """Exact and angle ground states plus barrier/inertia metrics for one preset."""
    row = SweepRow(parameter_value=float(value))
    try:
        preset = _make_preset(family, parameter, value, fixed)
        p = to_spin_params(preset)
        row.ground_exact = spectrum_exact(p).ground
        h = closed_form(preset)
        row.inertia_min = float(np.min(-h.inertia.values))
        _, row.blocked = inertia_zeros(h)
        row.ground_angle = solve(h, cfg, check_convergence=False).ground
        row.relative_error = relative_error(row.ground_angle, row.ground_exact)
        row.barrier_height, _ = barrier_height(h, row.ground_angle)
    except (ValueError, ArithmeticError) as exc:
        row.status = f"failed: {exc}"
    return row


def relative_error_curve(family, parameter, values: Sequence, fixed=None, cfg=SolverConfig(),
                         workers: Optional[int] = None) -> SweepResult:
    """Sweep one preset parameter, comparing closed-form angle and exact ground states.

    Failed rows (for example ill-posed negative kinetic coefficients) are
    kept with ``status`` set and NaN metrics. Rows come back in grid order.
    """
    fixed = dict(fixed or {})
    values = sorted(values)
    args = [(family, parameter, v, fixed, cfg) for v in values]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(evaluate_row, *zip(*args)))
    else:
        rows = [evaluate_row(*a) for a in args]
    unit = "epsilon" if family.lower() == "lipkin" else "kelvin"
    return SweepResult(parameter_name=parameter, rows=rows, unit=unit, family=family)


def pair_splittings(values, count=None):
    """Differences ``E[2k+1] - E[2k]`` over the lowest ``count`` levels."""
    v = np.asarray(values)
    if count is not None:
        v = v[:count]
    v = v[: 2 * (v.size // 2)]
    return v[1::2] - v[0::2]

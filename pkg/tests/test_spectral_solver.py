import math

import numpy as np
import pytest
from scipy.special import mathieu_a

from spintunnel import angle_hamiltonian as ah, exact_solver as ex
from spintunnel.analysis import pair_splittings
from spintunnel.spectral_solver import IllPosedError, SolverConfig, assemble, eigenfunctions, solve
from spintunnel.spin_models import Fe8, Lipkin, Mn12, to_spin_params
from spintunnel.validation import finite_difference_spectrum


def _const(v, i):
    return ah.AngleHamiltonian(ah.AngleFunction.from_callable(v), ah.AngleFunction.from_callable(i),
                               model=None, form="large_n_closed")


def test_free_rotor():
    w = solve(_const(lambda p: 0 * p, lambda p: -1 + 0 * p), SolverConfig(n_max=8)).values
    assert np.allclose(w[:9], [0, 0.5, 0.5, 2, 2, 4.5, 4.5, 8, 8], atol=1e-12)


def test_mathieu_ground_against_special_function():
    # -1/2 psi'' - cos(phi) psi = E psi  <=>  Mathieu a_0(q=4) / 8
    w = solve(_const(lambda p: -np.cos(p), lambda p: -1 + 0 * p), SolverConfig(n_max=32)).ground
    assert w == pytest.approx(mathieu_a(0, 4) / 8, abs=1e-10)


def test_mn12_and_fe8_ground_states():
    mn = solve(ah.closed_form_mn12(0.6, 10, 0.0))
    fe = solve(ah.closed_form_fe8(0.275, 0.046, 10))
    assert mn.ground == pytest.approx(-60.27860775, abs=1e-7)
    assert fe.ground == pytest.approx(-27.64468792, abs=1e-7)
    assert mn.converged and fe.converged and mn.unit == "kelvin"


def test_fe8_against_finite_differences():
    h = ah.closed_form_fe8(0.275, 0.046, 10)
    ref = finite_difference_spectrum(h.potential, h.kinetic_coeff, n=4096, k=4)
    assert np.allclose(solve(h).values[:4], ref, rtol=1e-5)


def test_mn12_levels_are_degenerate_pairs():
    # the inertia vanishes between the two wells, so levels pair up
    w = solve(ah.closed_form_mn12(0.6, 10, 0.0)).values
    assert np.max(np.abs(pair_splittings(w[:6]))) < 1e-8


def test_galerkin_monotone_in_basis():
    h = ah.closed_form_fe8(0.275, 0.046, 10)
    g = [solve(h, SolverConfig(n_max=n), check_convergence=False).ground for n in (4, 8, 16)]
    assert g[0] >= g[1] - 1e-12 >= g[2] - 2e-12


def test_assembled_matrix_hermitian():
    mat = assemble(ah.closed_form_lipkin(1.5, 20), SolverConfig(n_max=12))
    assert np.allclose(mat, mat.conj().T, atol=0)


@pytest.mark.parametrize("h", [ah.closed_form_mn12(0.6, 10, 0.3), ah.closed_form_lipkin(0.5, 20)])
def test_negative_kinetic_coefficient_rejected(h):
    with pytest.raises(IllPosedError):
        solve(h)


def test_config_validation():
    with pytest.raises(ValueError):
        SolverConfig(n_max=2)
    with pytest.raises(ValueError):
        SolverConfig(n_max=16, quadrature_points=32)


def test_eigenfunctions_normalised():
    h = ah.closed_form_fe8(0.275, 0.046, 10)
    spec = solve(h, SolverConfig(n_max=32), vectors=True, check_convergence=False)
    phi, psi = eigenfunctions(spec, 32, ah.angle_grid(2048))
    norm = np.sum(np.abs(psi[:, 0]) ** 2) * 2 * math.pi / 2048
    assert norm == pytest.approx(1.0, abs=1e-10)


def test_lipkin_error_decreases_with_size():
    errs = []
    for Ns in (4, 10, 20):
        e = ex.spectrum_exact(to_spin_params(Lipkin(1.0, Ns))).ground
        a = solve(ah.closed_form_lipkin(1.0, Ns)).ground
        errs.append(abs(a - e) / abs(e))
    assert errs[0] > errs[1] > errs[2]

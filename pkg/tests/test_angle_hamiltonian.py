import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from spintunnel import angle_hamiltonian as ah
from spintunnel.spin_models import Fe8, Lipkin, Mn12, SpinParams, to_spin_params


def test_angle_function_fourier_roundtrip():
    f = ah.AngleFunction.from_callable(lambda p: 1 + 2 * np.cos(p) - 0.5 * np.sin(3 * p))
    assert f.coefficient(0) == pytest.approx(1.0)
    assert f.coefficient(1) == pytest.approx(1.0)
    assert f.coefficient(3) == pytest.approx(0.25j)
    x = np.linspace(-3, 3, 7)
    assert np.allclose(f.derivative(x, 1), -2 * np.sin(x) - 1.5 * np.cos(3 * x))
    assert np.allclose(f.derivative(x, 2), -2 * np.cos(x) + 4.5 * np.sin(3 * x))


def test_angle_function_rejects_unresolved():
    with pytest.raises(ValueError):
        ah.AngleFunction.from_callable(lambda p: np.abs(p))


def test_lipkin_closed_form_values():
    h = ah.closed_form_lipkin(1.5, 20)
    assert h.potential(0.0) == pytest.approx(-10.5, abs=1e-12)
    assert h.potential(math.pi / 2) == pytest.approx(-8.625, abs=1e-12)
    atdhf = ah.atdhf_lipkin_potential(1.5, 20)
    assert h.potential(0.0) - atdhf(0.0) == pytest.approx(-0.5, abs=1e-12)
    assert h.inertia(0.0) == pytest.approx(-2 / 19 - 3 / 19, abs=1e-12)


def test_fe8_closed_form_values():
    h = ah.closed_form_fe8(0.275, 0.046, 10)
    assert h.potential(math.pi / 2) - h.potential(0.0) == pytest.approx(25.19, abs=1e-10)
    assert np.min(-h.inertia.values) == pytest.approx(0.184, abs=1e-12)
    assert np.allclose(h.kinetic_coeff.values, -0.5 * h.inertia.values)


def test_mn12_closed_form_zero_field():
    h = ah.closed_form_mn12(0.6, 10, 0.0)
    assert h.potential(0.0) == pytest.approx(-66.0)
    assert h.inertia(math.pi / 2) == pytest.approx(0.0, abs=1e-14)


@pytest.mark.parametrize("preset", [Lipkin(1.5, 20), Mn12(0.6, 10, 0.2), Fe8(0.275, 0.046, 10)])
def test_moment_paths_agree_and_are_real_even(preset):
    p = to_spin_params(preset)
    full, num = ah.build(p, "full"), ah.build(p, "wigner")
    assert full.potential.sup_distance(num.potential) < 1e-9
    assert full.inertia.sup_distance(num.inertia) < 1e-9
    for f in (full.potential, full.inertia):
        assert f.reality_defect() < 1e-12
        assert np.allclose(f(f.grid), f(-f.grid), atol=1e-10)


@pytest.mark.parametrize("preset", [Mn12(0.6, 10, 0.0), Fe8(0.275, 0.046, 10)])
def test_closed_potential_equals_full_sum(preset):
    # for purely quadratic models the large-spin potential is exact
    full = ah.build(to_spin_params(preset), "full")
    closed = ah.build(preset, "closed")
    assert full.potential.sup_distance(closed.potential) < 1e-10


def test_full_sum_approaches_closed_form_with_spin():
    dist = [ah.build(to_spin_params(Fe8(0.275, 0.046, S)), "full").inertia
            .sup_distance(ah.closed_form_fe8(0.275, 0.046, S).inertia) for S in (5, 10, 20)]
    assert dist[0] > dist[1] > dist[2]


@settings(max_examples=20, deadline=None)
@given(st.floats(-1, 1), st.floats(-1, 1), st.floats(-0.5, 0.5), st.integers(2, 8),
       st.floats(-3, 3), st.floats(-3, 3))
def test_wigner_surface_real_and_linear(A, B, G, j, u, phi):
    p = SpinParams(A, B, G, j)
    val = ah.wigner_surface(p, u, phi)
    assert abs(np.imag(val)) < 1e-9
    parts = (ah.wigner_surface(SpinParams(A, 0, 0, j), u, phi)
             + ah.wigner_surface(SpinParams(0, B, 0, j), u, phi)
             + ah.wigner_surface(SpinParams(0, 0, G, j), u, phi))
    assert val == pytest.approx(parts, abs=1e-9)


def test_u_grid():
    u, du = ah.u_grid(3)
    assert du == pytest.approx(2 * math.pi / 7)
    assert np.allclose(u, np.arange(-3, 4) * du)


def test_truncation_ratio_small_for_large_spin():
    assert ah.truncation_ratio(to_spin_params(Mn12())) < 1e-3


def test_half_integer_spin_rejected():
    with pytest.raises(ValueError):
        ah.build(SpinParams(0, -1, 0, 4.5), "full")


def test_table_columns():
    t = ah.closed_form_fe8(0.275, 0.046, 10).table()
    assert t.shape == (ah.DEFAULT_GRID, 4)
    assert t[0, 0] == pytest.approx(-math.pi)

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from spintunnel import semiclassical as sc
from spintunnel.spin_models import SpinParams, to_spin_params, Mn12


@settings(max_examples=40, deadline=None)
@given(st.floats(-2, 2), st.floats(-2, 2), st.floats(-1, 1), st.integers(1, 16),
       st.floats(-math.pi, math.pi), st.floats(-math.pi, math.pi))
def test_surface_matches_coherent_state_expectation(A, B, G, two_j, alpha, xi):
    p = SpinParams(A, B, G, two_j / 2)
    assert sc.energy_surface(p, alpha, xi) == pytest.approx(sc.expectation(p, alpha, xi), abs=1e-9)


def test_coherent_state_normalised():
    psi = sc.coherent_state(6, 0.7, 0.3)
    assert np.vdot(psi, psi).real == pytest.approx(1.0, abs=1e-13)


def test_symmetry_alpha_reflection(params):
    for p in params.values():
        xi = sc.minimize_xi(p)
        a = np.linspace(-3, 3, 17)
        assert np.allclose(sc.energy_surface(p, a, xi), sc.energy_surface(p, -a, xi), atol=1e-12)


def test_xi_choice():
    assert sc.minimize_xi(SpinParams(0, -1, 0.2, 5)) == pytest.approx(math.pi / 2)
    assert sc.minimize_xi(SpinParams(1, 0, -0.2, 5)) == 0.0


def test_mn12_minimum():
    alpha, e = sc.semiclassical_minimum(to_spin_params(Mn12()))
    assert e == pytest.approx(-60.0, abs=1e-9)
    assert min(abs(alpha), abs(math.pi - alpha)) < 1e-6

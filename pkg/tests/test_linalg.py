import numpy as np
from hypothesis import given, settings, strategies as st

from spintunnel import linalg


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 30), st.integers(0, 2**31 - 1))
def test_eigh_matches_reference(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((n, n))
    a = a + a.T
    w, v = linalg.eigh(a)
    assert np.allclose(w, np.linalg.eigvalsh(a), atol=1e-11 * max(1, np.abs(a).max()))
    assert np.allclose(a @ v, v * w, atol=1e-10 * max(1, np.abs(a).max()))
    assert np.allclose(v.T @ v, np.eye(n), atol=1e-11)
    assert np.all(np.diff(w) >= 0)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 20), st.integers(0, 2**31 - 1))
def test_hermitian_eigh(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    a = a + a.conj().T
    w, v = linalg.hermitian_eigh(a)
    assert np.allclose(w, np.linalg.eigvalsh(a), atol=1e-10)
    assert np.allclose(a @ v, v * w, atol=1e-10)
    assert np.allclose(v.conj().T @ v, np.eye(n), atol=1e-10)


def test_degenerate_and_diagonal():
    a = np.diag([3.0, 1.0, 1.0, -2.0])
    w, v = linalg.eigh(a)
    assert np.array_equal(w, [-2.0, 1.0, 1.0, 3.0])
    w, _ = linalg.hermitian_eigh(np.eye(3) * 2 + 0j)
    assert np.allclose(w, 2.0)


def test_values_only():
    a = np.array([[2.0, 1.0], [1.0, 2.0]])
    w, v = linalg.eigh(a, vectors=False)
    assert v is None and np.allclose(w, [1, 3])

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from hawking_battery.linalg import (
    I2,
    SIGMA_1,
    SIGMA_2,
    SIGMA_3,
    ConvergenceError,
    DensityMatrixError,
    DimensionError,
    SymmetryError,
    clamp_for_report,
    dagger,
    hermitian_eigenvalues,
    partial_trace,
    tensor,
    validate_density_matrix,
)
from hawking_battery.relativistic import Region, Scenario, reduced_state


def random_hermitian(rng, n):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (a + a.conj().T) / 2


def random_density(rng, n):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


# --- tensor -------------------------------------------------------------------------

def test_tensor_identities():
    np.testing.assert_array_equal(tensor(I2, I2), np.eye(4))
    np.testing.assert_array_equal(tensor(SIGMA_3, SIGMA_3), np.diag([1, -1, -1, 1]))
    np.testing.assert_array_equal(tensor(SIGMA_1, SIGMA_1), np.fliplr(np.eye(4)))


def test_tensor_is_associative():
    # small integer entries keep every product exact
    rng = np.random.default_rng(0)
    a, b, c = (rng.integers(-3, 4, (2, 2)) + 1j * rng.integers(-3, 4, (2, 2)) for _ in range(3))
    np.testing.assert_array_equal(tensor(tensor(a, b), c), tensor(a, tensor(b, c)))


def test_tensor_broadcasts_over_stacks():
    rng = np.random.default_rng(1)
    a = rng.normal(size=(5, 2, 3))
    b = rng.normal(size=(5, 3, 2))
    out = tensor(a, b)
    assert out.shape == (5, 6, 6)
    for i in range(5):
        np.testing.assert_allclose(out[i], np.kron(a[i], b[i]))


# --- dagger ---------------------------------------------------------------------------

def test_dagger():
    np.testing.assert_array_equal(dagger(np.eye(3)), np.eye(3))
    np.testing.assert_array_equal(dagger(SIGMA_2), SIGMA_2)
    a = np.random.default_rng(2).normal(size=(4, 4)) * (1 + 2j)
    np.testing.assert_array_equal(dagger(dagger(a)), a)


# --- partial trace --------------------------------------------------------------------

def test_partial_trace_of_product_state():
    rng = np.random.default_rng(3)
    ra, rb = random_density(rng, 2), random_density(rng, 3)
    np.testing.assert_allclose(partial_trace(tensor(ra, rb), keep=[0], dims=(2, 3)), ra, atol=1e-15)
    np.testing.assert_allclose(partial_trace(tensor(ra, rb), keep=[1], dims=(2, 3)), rb, atol=1e-15)


def test_partial_trace_scales_by_trace_of_discarded_factor():
    rng = np.random.default_rng(4)
    a, b = rng.normal(size=(2, 2)), rng.normal(size=(2, 2))
    np.testing.assert_allclose(partial_trace(tensor(a, b), [0], (2, 2)), a * np.trace(b), atol=1e-14)


def test_partial_trace_of_bell_state_is_maximally_mixed():
    phi = np.array([1, 0, 0, 1]) / math.sqrt(2)
    np.testing.assert_allclose(partial_trace(np.outer(phi, phi), [0], (2, 2)), I2 / 2, atol=1e-15)


def test_partial_trace_reorders_kept_subsystems():
    rng = np.random.default_rng(5)
    ra, rb, rc = random_density(rng, 2), random_density(rng, 2), random_density(rng, 2)
    rho = tensor(tensor(ra, rb), rc)
    np.testing.assert_allclose(partial_trace(rho, [2, 0], (2, 2, 2)), tensor(rc, ra), atol=1e-15)


def test_partial_trace_dimension_mismatch():
    with pytest.raises(DimensionError):
        partial_trace(np.eye(4), [0], (2, 3))
    with pytest.raises(DimensionError):
        partial_trace(np.eye(4), [0, 0], (2, 2))
    with pytest.raises(DimensionError):
        partial_trace(np.eye(4), [2], (2, 2))


# --- Jacobi eigenvalues ---------------------------------------------------------------

def test_eigenvalues_of_simple_matrices():
    np.testing.assert_allclose(hermitian_eigenvalues(np.eye(4)), [1, 1, 1, 1])
    np.testing.assert_allclose(hermitian_eigenvalues(SIGMA_3), [-1, 1])
    np.testing.assert_allclose(hermitian_eigenvalues(SIGMA_2), [-1, 1], atol=1e-15)


def test_eigenvalues_of_reference_state():
    rho = reduced_state(Scenario(Region.A1B1, p=0.3, eta_a=0.0, eta_b=math.pi / 6))
    lam = hermitian_eigenvalues(rho)
    np.testing.assert_allclose(lam, [0.13125, 0.16209, 0.25625, 0.45041], atol=5e-6)
    assert abs(lam.sum() - 1) < 1e-12


@pytest.mark.parametrize("n", [2, 3, 4, 8, 16])
def test_eigenvalues_match_lapack(n):
    rng = np.random.default_rng(n)
    for _ in range(20):
        a = random_hermitian(rng, n)
        np.testing.assert_allclose(hermitian_eigenvalues(a), np.linalg.eigvalsh(a), atol=1e-12)


def test_eigenvalues_batched():
    rng = np.random.default_rng(7)
    stack = np.stack([random_hermitian(rng, 4) for _ in range(30)]).reshape(5, 6, 4, 4)
    np.testing.assert_allclose(hermitian_eigenvalues(stack), np.linalg.eigvalsh(stack), atol=1e-12)


def test_eigenvalues_ascending_with_degeneracy():
    u = np.linalg.qr(np.random.default_rng(8).normal(size=(4, 4)))[0]
    a = u @ np.diag([0.5, 0.1, 0.5, 0.1]) @ u.T
    lam = hermitian_eigenvalues(a)
    assert np.all(np.diff(lam) >= 0)
    np.testing.assert_allclose(lam, [0.1, 0.1, 0.5, 0.5], atol=1e-14)


def test_non_hermitian_rejected():
    a = np.array([[1.0, 2.0], [0.0, 1.0]])
    with pytest.raises(SymmetryError):
        hermitian_eigenvalues(a)
    with pytest.raises(DimensionError):
        hermitian_eigenvalues(np.ones((2, 3)))


def test_non_convergence_raises():
    a = random_hermitian(np.random.default_rng(9), 6)
    with pytest.raises(ConvergenceError):
        hermitian_eigenvalues(a, max_sweeps=1)


@settings(max_examples=60, deadline=None)
@given(arrays(np.float64, (2, 4, 4), elements=st.floats(-10, 10)))
def test_eigenvalues_property(parts):
    a = parts[0] + 1j * parts[1]
    a = (a + a.conj().T) / 2
    lam = hermitian_eigenvalues(a)
    scale = max(1.0, np.abs(a).max())
    np.testing.assert_allclose(lam, np.linalg.eigvalsh(a), atol=1e-11 * scale)
    assert abs(lam.sum() - np.trace(a).real) < 1e-11 * scale


# --- density matrix validation --------------------------------------------------------

def test_validate_density_matrix():
    validate_density_matrix(np.eye(4) / 4)
    with pytest.raises(DensityMatrixError):
        validate_density_matrix(np.eye(4) / 2)
    with pytest.raises(DensityMatrixError):
        validate_density_matrix(np.diag([1.2, -0.2]))
    with pytest.raises(DensityMatrixError):
        validate_density_matrix(np.array([[0.5, 0.1], [0.3, 0.5]]))


def test_clamp_for_report_only_touches_slack():
    out = clamp_for_report(np.array([-1e-13, 0.2, 0.8]))
    np.testing.assert_array_equal(out, [0.0, 0.2, 0.8])

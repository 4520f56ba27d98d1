import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hawking_battery.battery import (
    ZZ,
    ZZ_MATRIX,
    HamiltonianSpec,
    OrderingError,
    capacity,
    capacity_zz,
    evaluate,
    pipeline_capacity,
)
from hawking_battery.channels import ChannelSpec
from hawking_battery.linalg import hermitian_eigenvalues
from hawking_battery.relativistic import DomainError, Region, Scenario, isotropic_state


def spectrum_strategy(d=4):
    return st.lists(st.floats(0.0, 1.0), min_size=d, max_size=d).filter(lambda v: sum(v) > 1e-3).map(
        lambda v: np.sort(np.array(v) / sum(v)))


def test_hamiltonian_spec():
    assert ZZ.energies == (-1.0, -1.0, 1.0, 1.0)
    assert HamiltonianSpec.from_matrix(ZZ_MATRIX).energies == pytest.approx(ZZ.energies)
    with pytest.raises(OrderingError):
        HamiltonianSpec((1.0, 0.0))


def test_capacity_examples():
    assert capacity([0.25] * 4) == 0.0
    assert capacity([1 / 3] * 3, HamiltonianSpec((-2.0, 0.5, 3.0))) == pytest.approx(0.0, abs=1e-15)
    assert capacity([0.0, 1.0], HamiltonianSpec((-1.0, 1.0))) == 2.0
    for p in np.linspace(0, 1, 11):
        lam = hermitian_eigenvalues(isotropic_state(p))
        assert capacity(lam) == pytest.approx(2 * p, abs=1e-12)


def test_capacity_zz_examples():
    assert capacity_zz([0.25] * 4) == 0.0
    assert capacity_zz([0, 0, 0, 1]) == 2.0
    assert capacity_zz([0.13125, 0.16209, 0.25625, 0.45041]) == pytest.approx(0.82664, abs=1e-4)


def test_capacity_errors():
    with pytest.raises(DomainError):
        capacity([0.5, 0.5])
    with pytest.raises(OrderingError):
        capacity([0.4, 0.3, 0.2, 0.1])
    with pytest.raises(DomainError):
        capacity_zz([0.5, 0.5])
    with pytest.raises(OrderingError):
        capacity_zz([0.4, 0.3, 0.2, 0.1])


@settings(max_examples=200)
@given(spectrum_strategy())
def test_capacity_zz_matches_general(lam):
    assert abs(capacity_zz(lam) - capacity(lam, ZZ)) < 1e-14
    assert -1e-15 <= capacity_zz(lam) <= 2 + 1e-15


@settings(max_examples=100)
@given(spectrum_strategy(), st.floats(0.0, 1.0))
def test_mixing_toward_uniform_never_increases_capacity(lam, t):
    mixed = (1 - t) * lam + t / 4
    assert capacity_zz(mixed) <= capacity_zz(lam) + 1e-14


@settings(max_examples=100)
@given(spectrum_strategy(5), st.lists(st.floats(-3, 3), min_size=5, max_size=5))
def test_general_capacity_nonnegative(lam, energies):
    assert capacity(lam, HamiltonianSpec(tuple(sorted(energies)))) >= -1e-12


def test_tied_energies_permutation_invariant():
    lam = np.array([0.05, 0.15, 0.3, 0.5])
    base = capacity(lam, ZZ)
    for perm in itertools.permutations(range(4)):
        e = np.array(ZZ.energies)[list(perm)]
        if np.all(np.diff(e) >= 0):
            # only orders that keep energies ascending are admissible
            assert capacity(lam, HamiltonianSpec(tuple(e))) == base
    # explicit weighting with tied pairs swapped
    e = np.array([-1.0, -1.0, 1.0, 1.0])
    swapped = e[[1, 0, 3, 2]]
    assert np.sum(swapped * (lam - lam[::-1])) == pytest.approx(base, abs=1e-15)


def test_unitary_invariance():
    rng = np.random.default_rng(11)
    rho = np.asarray(evaluate(Scenario(Region.A1B1, 0.3, 0.4, math.pi / 6)).spectrum)
    rho = np.diag(rho).astype(complex)
    base = capacity_zz(hermitian_eigenvalues(rho))
    for _ in range(100):
        z = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        u, _ = np.linalg.qr(z)
        assert abs(capacity_zz(hermitian_eigenvalues(u @ rho @ u.conj().T)) - base) < 1e-9


def test_evaluate_examples():
    r = evaluate(Scenario(Region.A1B1, 1.0, 0.9, math.pi / 6))
    assert r.capacity == pytest.approx(2.0, abs=1e-10)
    assert r.path == "pipeline"
    assert r.residual < 1e-12
    r = evaluate(Scenario(Region.A1B1, 0.0, math.pi / 12, math.pi / 6))
    assert r.capacity == pytest.approx(0.5, abs=1e-10)
    for region in Region:
        r = evaluate(Scenario(region, 0.3, 0.6, math.pi / 6, ChannelSpec("dep", 0.75)))
        assert abs(r.capacity) < 1e-10


def test_pipeline_capacity_broadcasts():
    etas = np.linspace(0, math.pi / 2, 7)
    caps, spectra = pipeline_capacity(Region.A2B1, "bf", 0.3, etas, math.pi / 6, 0.2)
    assert caps.shape == (7,)
    assert spectra.shape == (7, 4)
    for e, c in zip(etas, caps):
        assert evaluate(Scenario(Region.A2B1, 0.3, e, math.pi / 6, ChannelSpec("bf", 0.2))).capacity == \
            pytest.approx(c, abs=1e-12)

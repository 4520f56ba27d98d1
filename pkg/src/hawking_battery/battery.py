"""Quantum battery capacity and the end-to-end pipeline.

Capacity of a state with ascending spectrum ``lam`` under a Hamiltonian with
ascending energies ``eps``::

    C = sum_i eps_i (lam_i - lam_{d-1-i})

For ``H = Z (x) Z`` this is ``2 (lam3 + lam2 - lam1 - lam0)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .analytic import Noise, analytic_capacity
from .channels import ChannelSpec, Target, apply_channel
from .linalg import SIGMA_3, dagger, hermitian_eigenvalues, partial_trace, tensor
from .relativistic import DomainError, Region, Scenario, isotropic_state, noisy_state


class OrderingError(ValueError):
    pass


@dataclass(frozen=True)
class HamiltonianSpec:
    energies: tuple[float, ...]

    def __post_init__(self):
        e = tuple(float(x) for x in self.energies)
        if any(b < a for a, b in zip(e, e[1:])):
            raise OrderingError("Hamiltonian energies must be ascending")
        object.__setattr__(self, "energies", e)

    @classmethod
    def from_matrix(cls, h: np.ndarray) -> "HamiltonianSpec":
        return cls(tuple(hermitian_eigenvalues(h)))

    @property
    def dim(self) -> int:
        return len(self.energies)


ZZ = HamiltonianSpec((-1.0, -1.0, 1.0, 1.0))
ZZ_MATRIX = np.kron(SIGMA_3, SIGMA_3)


def capacity(spectrum: Sequence[float], h: HamiltonianSpec = ZZ) -> float:
    lam = np.asarray(spectrum, dtype=float)
    if lam.ndim != 1 or lam.size != h.dim:
        raise DomainError(f"spectrum of length {lam.size} does not match Hamiltonian of dim {h.dim}")
    if np.any(np.diff(lam) < 0):
        raise OrderingError("spectrum must be sorted ascending")
    eps = np.asarray(h.energies)
    return float(np.sum(eps * (lam - lam[::-1])))


def capacity_zz(spectrum: Sequence[float]) -> float:
    lam = np.asarray(spectrum, dtype=float)
    if lam.shape != (4,):
        raise DomainError("capacity_zz needs exactly four eigenvalues")
    if np.any(np.diff(lam) < 0):
        raise OrderingError("spectrum must be sorted ascending")
    return float(2 * (lam[3] + lam[2] - lam[1] - lam[0]))


@dataclass(frozen=True)
class CapacityRecord:
    spectrum: np.ndarray
    capacity: float
    path: str = "pipeline"
    analytic_capacity: Optional[float] = None
    residual: Optional[float] = field(default=None)


def evaluate(scenario: Scenario) -> CapacityRecord:
    """Pipeline capacity of one scenario, cross-checked against the closed form."""
    rho = noisy_state(scenario, path="pipeline")
    spectrum = hermitian_eigenvalues(rho)
    value = capacity_zz(spectrum)
    ch = scenario.channel
    noise = Noise.NONE if ch is None else Noise(ch.kind.value)
    k = 0.0 if ch is None else ch.k
    other = float(analytic_capacity(scenario.region, noise, scenario.p,
                                    scenario.eta_a, scenario.eta_b, k))
    return CapacityRecord(spectrum, value, "pipeline", other, abs(value - other))


# --- vectorised pipeline over parameter grids ----------------------------------------

def _isometry_stack(eta: np.ndarray) -> np.ndarray:
    v = np.zeros(eta.shape + (4, 2), dtype=complex)
    v[..., 0b00, 0] = np.cos(eta)
    v[..., 0b11, 0] = np.sin(eta)
    v[..., 0b10, 1] = 1.0
    return v


def pipeline_reduced_states(region, p, eta_a, eta_b) -> np.ndarray:
    """Region-pair states for broadcast parameter arrays, via the 16x16 state."""
    p, eta_a, eta_b = np.broadcast_arrays(*(np.asarray(x, dtype=float) for x in (p, eta_a, eta_b)))
    shape = p.shape
    p, eta_a, eta_b = p.ravel(), eta_a.ravel(), eta_b.ravel()
    base = isotropic_state(0.0)
    iso = base + p[:, None, None] * (isotropic_state(1.0) - base)
    v = tensor(_isometry_stack(eta_a), _isometry_stack(eta_b))
    big = v @ iso @ dagger(v)
    red = partial_trace(big, keep=Region(region).modes, dims=(2, 2, 2, 2))
    return red.reshape(shape + (4, 4))


def apply_noise(states: np.ndarray, noise, k) -> np.ndarray:
    """Broadcast a channel over ``states[..., 4, 4]`` and a ``k`` array."""
    noise = Noise(noise)
    if noise is Noise.NONE:
        return np.asarray(states)
    k = np.asarray(k, dtype=float)
    states, _ = np.broadcast_arrays(states, k[..., None, None])
    flat_states = states.reshape((-1, 4, 4))
    flat_k = np.broadcast_to(k, states.shape[:-2]).ravel()
    out = np.empty_like(flat_states)
    for kv in np.unique(flat_k):
        sel = flat_k == kv
        out[sel] = apply_channel(flat_states[sel], ChannelSpec(noise.value, float(kv)),
                                 Target.BOTH, validate=False)
    return out.reshape(states.shape)


def pipeline_capacity(region, noise, p, eta_a, eta_b=math.pi / 6, k=0.0):
    """Pipeline spectra and capacities over broadcast parameter arrays.

    Returns:
        ``(capacity, spectra)`` with ``spectra[..., 4]`` sorted ascending.
    """
    states = pipeline_reduced_states(region, p, eta_a, eta_b)
    states = apply_noise(states, noise, k)
    spectra = hermitian_eigenvalues(states)
    caps = 2 * (spectra[..., 3] + spectra[..., 2] - spectra[..., 1] - spectra[..., 0])
    return caps, spectra

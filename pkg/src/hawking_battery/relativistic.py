"""Isotropic two-qubit state seen by observers hovering near a Schwarzschild horizon.

Each observer's qubit is a Kruskal mode that splits into an outside (I) and
inside (II) Rindler mode::

    |0>_K = cos(eta) |0>_I |0>_II + sin(eta) |1>_I |1>_II
    |1>_K = |1>_I |0>_II

with ``sin(eta) = (exp(omega / T) + 1) ** -0.5``. Pushing the shared state
through both isometries gives a four-mode state over (A_I, A_II, B_I, B_II);
each region pair is one of its two-qubit marginals.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .bloch import BlochTwoQubit
from .channels import ChannelSpec, Target, apply_channel, bloch_action, channel_factors, scale_bloch
from .linalg import I2, SIGMA_1, SIGMA_2, SIGMA_3, dagger, partial_trace

ETA_PHYSICAL_MAX = math.pi / 4
DEFAULT_P = 0.3
DEFAULT_ETA_B = math.pi / 6


class DomainError(ValueError):
    pass


class Region(str, enum.Enum):
    A1B1 = "A1B1"
    A1B2 = "A1B2"
    A2B1 = "A2B1"
    A2B2 = "A2B2"

    @property
    def modes(self) -> tuple[int, int]:
        """Indices of the kept modes in (A_I, A_II, B_I, B_II) order."""
        return {"A1B1": (0, 2), "A1B2": (0, 3), "A2B1": (1, 2), "A2B2": (1, 3)}[self.value]

    @property
    def label(self) -> str:
        a, b = self.value[1], self.value[3]
        return f"A_{'I' * int(a)} B_{'I' * int(b)}"


@dataclass(frozen=True)
class HawkingParam:
    """Mode-mixing angle, optionally with the (omega, T) it came from."""

    eta: float
    omega: Optional[float] = None
    temperature: Optional[float] = None

    def __post_init__(self):
        if not 0.0 <= self.eta <= math.pi / 2:
            raise DomainError(f"eta must lie in [0, pi/2], got {self.eta}")

    @property
    def mass(self) -> Optional[float]:
        # T = 1 / (8 pi M) in natural units
        if self.temperature is None:
            return None
        return 1.0 / (8 * math.pi * self.temperature)

    @property
    def physical(self) -> bool:
        """False past pi/4, which no finite Hawking temperature reaches."""
        return self.eta < ETA_PHYSICAL_MAX


def _eta(value) -> float:
    return value.eta if isinstance(value, HawkingParam) else float(value)


def eta_from_temperature(omega: float, temperature: float) -> HawkingParam:
    if omega <= 0 or temperature <= 0:
        raise DomainError("omega and temperature must both be positive")
    x = omega / temperature
    # (e^x + 1)^{-1/2}, written to stay finite for huge x
    sin_eta = math.exp(-0.5 * x) / math.sqrt(1.0 + math.exp(-x))
    return HawkingParam(math.asin(sin_eta), omega=omega, temperature=temperature)


@dataclass(frozen=True)
class Scenario:
    region: Region
    p: float = DEFAULT_P
    eta_a: float = 0.0
    eta_b: float = DEFAULT_ETA_B
    channel: Optional[ChannelSpec] = None

    def __post_init__(self):
        object.__setattr__(self, "region", Region(self.region))
        object.__setattr__(self, "eta_a", _eta(self.eta_a))
        object.__setattr__(self, "eta_b", _eta(self.eta_b))
        if not 0.0 <= self.p <= 1.0:
            raise DomainError(f"p must lie in [0, 1], got {self.p}")
        HawkingParam(self.eta_a)
        HawkingParam(self.eta_b)


def isotropic_state(p: float) -> np.ndarray:
    """(1-p)/4 I + p |psi+><psi+| with |psi+> = (|01> + |10>)/sqrt(2)."""
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"p must lie in [0, 1], got {p}")
    ident = np.kron(I2, I2)
    return 0.25 * (
        ident
        + p * np.kron(SIGMA_1, SIGMA_1)
        + p * np.kron(SIGMA_2, SIGMA_2)
        - p * np.kron(SIGMA_3, SIGMA_3)
    )


def hawking_isometry(eta) -> np.ndarray:
    """4x2 map from a Kruskal qubit to (region I, region II) modes."""
    eta = _eta(eta)
    v = np.zeros((4, 2), dtype=complex)
    v[0b00, 0] = math.cos(eta)
    v[0b11, 0] = math.sin(eta)
    v[0b10, 1] = 1.0
    return v


def four_partite_state(p: float, eta_a, eta_b) -> np.ndarray:
    """16x16 state over (A_I, A_II, B_I, B_II)."""
    v = np.kron(hawking_isometry(eta_a), hawking_isometry(eta_b))
    return v @ isotropic_state(p) @ dagger(v)


def bloch_coefficients(scenario: Scenario) -> BlochTwoQubit:
    """Closed-form Bloch coefficients of a region-pair state, channel included."""
    coeffs = region_bloch(scenario.region, scenario.p, scenario.eta_a, scenario.eta_b)
    if scenario.channel is not None:
        coeffs = bloch_action(scenario.channel, coeffs)
    return coeffs


def region_bloch(region, p, eta_a, eta_b) -> BlochTwoQubit:
    """Noiseless Bloch coefficients; broadcasts over array parameters."""
    region = Region(region)
    sa, ca = np.sin(eta_a), np.cos(eta_a)
    sb, cb = np.sin(eta_b), np.cos(eta_b)
    if region is Region.A1B1:
        return BlochTwoQubit(
            a3=-sa**2,
            b3=-sb**2,
            c1=p * ca * cb,
            c2=p * ca * cb,
            c3=sa**2 * sb**2 - p * ca**2 * cb**2,
        )
    if region is Region.A1B2:
        return BlochTwoQubit(
            a3=-sa**2,
            b3=cb**2,
            c1=p * ca * sb,
            c2=-p * ca * sb,
            c3=p * ca**2 * sb**2 - sa**2 * cb**2,
        )
    if region is Region.A2B1:
        return BlochTwoQubit(
            a3=ca**2,
            b3=-sb**2,
            c1=p * sa * cb,
            c2=-p * sa * cb,
            c3=p * sa**2 * cb**2 - ca**2 * sb**2,
        )
    return BlochTwoQubit(
        a3=ca**2,
        b3=cb**2,
        c1=p * sa * sb,
        c2=p * sa * sb,
        c3=ca**2 * cb**2 - p * sa**2 * sb**2,
    )


def bloch_states(region, noise: str, p, eta_a, eta_b, k=0.0) -> np.ndarray:
    """Matrices rebuilt from closed-form coefficients over broadcast arrays.

    ``noise`` is ``"none"`` or a channel kind; the channel acts on both qubits.
    """
    p, eta_a, eta_b, k = np.broadcast_arrays(*(np.asarray(x, dtype=float) for x in (p, eta_a, eta_b, k)))
    coeffs = region_bloch(region, p, eta_a, eta_b)
    if noise != "none":
        coeffs = scale_bloch(channel_factors(noise, k), coeffs)
    return BlochTwoQubit(*(np.broadcast_to(c, p.shape) for c in coeffs.as_tuple())).to_matrix()


def reduced_state(scenario: Scenario, path: str = "pipeline") -> np.ndarray:
    """Noiseless two-qubit state of the scenario's region pair.

    ``pipeline`` traces the four-mode state; ``bloch`` rebuilds the matrix
    from the closed-form coefficients. Use :func:`noisy_state` when a channel
    is attached.
    """
    if scenario.channel is not None:
        raise DomainError("reduced_state is channel-free; use noisy_state")
    return _reduced(scenario, path)


def _reduced(scenario: Scenario, path: str) -> np.ndarray:
    if path == "pipeline":
        rho = four_partite_state(scenario.p, scenario.eta_a, scenario.eta_b)
        return partial_trace(rho, keep=scenario.region.modes, dims=(2, 2, 2, 2))
    if path == "bloch":
        bare = Scenario(scenario.region, scenario.p, scenario.eta_a, scenario.eta_b)
        return bloch_coefficients(bare).to_matrix()
    raise DomainError(f"unknown path {path!r}")


def noisy_state(scenario: Scenario, path: str = "pipeline") -> np.ndarray:
    """Region-pair state after the scenario's channel acts on both qubits."""
    if path == "bloch":
        return bloch_coefficients(scenario).to_matrix()
    rho = _reduced(scenario, path)
    if scenario.channel is None:
        return rho
    return apply_channel(rho, scenario.channel, Target.BOTH)
